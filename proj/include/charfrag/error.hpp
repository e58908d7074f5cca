#ifndef CHARFRAG_ERROR_HPP
#define CHARFRAG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace charfrag {

enum class errc {
  parse = 1,       // malformed input text
  invalid = 2,     // precondition violated by caller
  guard = 3,       // size guard exceeded
  internal = 4,    // invariant broken inside the library
};

class error : public std::runtime_error {
public:
  error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

inline void require(bool ok, errc c, const std::string& what) {
  if (!ok) fail(c, what);
}

} // namespace charfrag

#endif
