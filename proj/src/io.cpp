#include "bruck/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace bruck::io {

namespace {

std::size_t read_count(std::istream& in, const char* what) {
  long long v = -1;
  if (!(in >> v) || v < 0) throw Error(ErrorKind::ParseError, std::string("expected ") + what);
  return static_cast<std::size_t>(v);
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return in;
}

}  // namespace

Loop read_loop(std::istream& in) {
  const std::size_t n = read_count(in, "loop order");
  if (n == 0) throw Error(ErrorKind::InvalidLoop, "order must be positive");
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long v = -1;
      if (!(in >> v)) {
        throw Error(ErrorKind::ParseError, "row " + std::to_string(i) + " is short (column " + std::to_string(j) + ")");
      }
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::InvalidLoop, "row " + std::to_string(i) + ", column " + std::to_string(j) +
                                                ": entry " + std::to_string(v) + " out of range");
      }
      table.push_back(static_cast<Element>(v));
    }
  }
  return Loop(n, std::move(table));
}

Loop read_loop_file(const std::string& path) {
  std::ifstream in = open(path);
  return read_loop(in);
}

void write_loop(std::ostream& out, const Loop& loop) {
  const std::size_t n = loop.order();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != 0) out << ' ';
      out << loop.mul(static_cast<Element>(i), static_cast<Element>(j));
    }
    out << '\n';
  }
}

std::string format_loop(const Loop& loop) {
  std::ostringstream out;
  write_loop(out, loop);
  return out.str();
}

Perm read_perm(std::istream& in, std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    long long v = -1;
    if (!(in >> v)) throw Error(ErrorKind::ParseError, "short image array");
    if (v < 0 || static_cast<std::size_t>(v) >= degree) {
      throw Error(ErrorKind::ParseError, "image " + std::to_string(v) + " out of range");
    }
    images[i] = static_cast<Point>(v);
  }
  try {
    return Perm(std::move(images));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

void write_perm(std::ostream& out, const Perm& p) {
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i != 0) out << ' ';
    out << p[i];
  }
  out << '\n';
}

PermGroup read_perm_group(std::istream& in) {
  const std::size_t degree = read_count(in, "degree");
  if (degree == 0 || degree > kMaxDegree) throw Error(ErrorKind::ParseError, "degree out of range");
  const std::size_t count = read_count(in, "generator count");
  std::vector<Perm> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i) gens.push_back(read_perm(in, degree));
  return PermGroup(degree, std::move(gens));
}

PermGroup read_perm_group_file(const std::string& path) {
  std::ifstream in = open(path);
  return read_perm_group(in);
}

void write_perm_group(std::ostream& out, std::size_t degree, const std::vector<Perm>& generators) {
  out << degree << '\n' << generators.size() << '\n';
  for (const Perm& g : generators) write_perm(out, g);
}

LoopFolder read_folder(std::istream& in) {
  const std::size_t degree = read_count(in, "degree");
  if (degree == 0 || degree > kMaxDegree) throw Error(ErrorKind::ParseError, "degree out of range");
  auto block = [&](const char* what) {
    const std::size_t count = read_count(in, what);
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(read_perm(in, degree));
    return gens;
  };
  PermGroup g(degree, block("G generator count"));
  std::vector<Perm> hgens = block("H generator count");
  for (std::size_t i = 0; i < hgens.size(); ++i) {
    if (!g.contains(hgens[i])) throw Error(ErrorKind::ParseError, "H generator " + std::to_string(i) + " is not in G");
  }
  PermGroup h(degree, std::move(hgens));
  std::vector<Perm> k;
  while (!(in >> std::ws).eof()) k.push_back(read_perm(in, degree));
  if (k.empty()) throw Error(ErrorKind::ParseError, "folder has no K elements");
  return LoopFolder{std::move(g), std::move(h), std::move(k)};
}

LoopFolder read_folder_file(const std::string& path) {
  std::ifstream in = open(path);
  return read_folder(in);
}

void write_folder(std::ostream& out, const LoopFolder& f) {
  out << f.g.degree() << '\n';
  out << f.g.generators().size() << '\n';
  for (const Perm& x : f.g.generators()) write_perm(out, x);
  out << f.h.generators().size() << '\n';
  for (const Perm& x : f.h.generators()) write_perm(out, x);
  for (const Perm& x : f.k) write_perm(out, x);
}

}  // namespace bruck::io
