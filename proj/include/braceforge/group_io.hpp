#ifndef BRACEFORGE_GROUP_IO_HPP
#define BRACEFORGE_GROUP_IO_HPP

#include <iosfwd>
#include <string>

#include "braceforge/finite_group.hpp"

namespace braceforge {

// Text format for groups:
//
//   n
//   n lines with n space separated indices (row a holds a*0 .. a*(n-1))
//   optional trailing label lines of the form    # <index> <name>
//
// Blank lines are ignored.  Indices refer to the file's own numbering; the
// loader re-validates and moves the identity to index 0 if necessary.
FiniteGroup read_group(std::istream& in, const std::string& source = "<stream>");
FiniteGroup read_group_file(const std::string& path);
void write_group(std::ostream& out, const FiniteGroup& g);
void write_group_file(const std::string& path, const FiniteGroup& g);

}  // namespace braceforge

#endif
