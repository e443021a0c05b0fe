#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bruck/folder.hpp"
#include "bruck/loop.hpp"
#include "bruck/perm_group.hpp"

namespace bruck::io {

// Loop table: "n" then n rows of n space-separated entries, row i column j = i*j.
Loop read_loop(std::istream& in);
Loop read_loop_file(const std::string& path);
void write_loop(std::ostream& out, const Loop& loop);
std::string format_loop(const Loop& loop);

// Permutation group: degree, generator count g, then g image arrays.
PermGroup read_perm_group(std::istream& in);
PermGroup read_perm_group_file(const std::string& path);
void write_perm_group(std::ostream& out, std::size_t degree, const std::vector<Perm>& generators);

// Folder: degree; G as a generator count then image arrays; H likewise
// (generators must lie in G); then the K image arrays, one per line, to EOF.
LoopFolder read_folder(std::istream& in);
LoopFolder read_folder_file(const std::string& path);
void write_folder(std::ostream& out, const LoopFolder& f);

// Reads one image array of the given degree.
Perm read_perm(std::istream& in, std::size_t degree);
void write_perm(std::ostream& out, const Perm& p);

}  // namespace bruck::io
