#pragma once

#include "semicut/digraph.hpp"

#include <iosfwd>
#include <string>

namespace semicut {

/** Text format
 *
 *      semicomplete <n> [weighted]
 *      <n rows of n characters, '1'/'0'; row u column v = arc (u,v)>
 *      <if weighted: one line "u v w" per arc, w an integer, decimal or p/q>
 *
 *  '#' starts a comment anywhere on a line; blank lines are ignored.
 *  The writer is deterministic: rows in vertex order, weight lines
 *  sorted by (u,v), rationals in canonical form.
 */
SemiCompleteDigraph read_digraph(std::istream& in);
SemiCompleteDigraph read_digraph(const std::string& text);
SemiCompleteDigraph read_digraph_file(const std::string& path);

void write_digraph(const SemiCompleteDigraph& t, std::ostream& out);
std::string write_digraph(const SemiCompleteDigraph& t);
void write_digraph_file(const SemiCompleteDigraph& t, const std::string& path);

} // namespace semicut
