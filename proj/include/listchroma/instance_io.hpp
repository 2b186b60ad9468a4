#ifndef LISTCHROMA_INSTANCE_IO_HPP
#define LISTCHROMA_INSTANCE_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "listchroma/core.hpp"

namespace listchroma {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg);
  int line() const { return line_; }

 private:
  int line_;
};

/// Text format, 1-based ids:
///   p mwlcp <n> <m> <ncolors>
///   e <u> <v>                       (m lines)
///   w <j> <weight>                  (ncolors lines)
///   l <v> <len> <j1> ... <jlen>     (n lines)
/// Lines starting with `c` are comments.
RawInstance parse_instance(std::istream& in);
RawInstance parse_instance_text(const std::string& text);

/// Writes `comments` as `c` lines, then the instance in the order above.
void write_instance(std::ostream& out, const RawInstance& raw,
                    const std::vector<std::string>& comments = {});
std::string instance_text(const RawInstance& raw, const std::vector<std::string>& comments = {});

}  // namespace listchroma

#endif  // LISTCHROMA_INSTANCE_IO_HPP
