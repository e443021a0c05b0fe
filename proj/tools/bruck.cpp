// Command-line front end. Exit codes: 0 ok, 1 a mathematical check failed
// (witness printed), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bruck/folder.hpp"
#include "bruck/group_algos.hpp"
#include "bruck/io.hpp"
#include "bruck/loop.hpp"
#include "bruck/pgl.hpp"
#include "bruck/search.hpp"
#include "bruck/structure.hpp"

using namespace bruck;
using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  std::size_t order_bound = 96;
  std::size_t enum_bound = 200'000;
  std::uint64_t budget = 1'000'000;

  Bounds bounds() const { return Bounds{order_bound, enum_bound}; }
};

// Thrown for results that are reported rather than raised by the library.
struct CheckFailed {
  std::string what;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoTwoSidedInverse:
    case ErrorKind::NotBol:
    case ErrorKind::NotBruck:
    case ErrorKind::NotNormal:
    case ErrorKind::NotATransversal:
    case ErrorKind::AutomorphismUnrealizable:
    case ErrorKind::NonIntegralNJ:
    case ErrorKind::DecompositionFailed:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::EvenOrder:
      return 1;
    default:
      return 2;
  }
}

Loop load_loop(const std::string& path) {
  if (path == "-") return io::read_loop(std::cin);
  return io::read_loop_file(path);
}

json set_json(const SubloopSet& s) { return json(s); }

std::string set_text(const SubloopSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  out << '}';
  return out.str();
}

json rows(const Loop& l) {
  json out = json::array();
  for (Element i = 0; i < l.order(); ++i) out.push_back(std::vector<Element>(l.row(i).begin(), l.row(i).end()));
  return out;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

// ---- verbs ----

int run_check(const Options& o, const std::string& path, const std::string& require) {
  const Loop x = load_loop(path);
  json j{{"order", x.order()}};
  std::ostringstream t;
  t << "order=" << x.order();
  const auto bol_w = bol_violation(x);
  j["bol"] = !bol_w;
  if (bol_w) j["bol_witness"] = *bol_w;
  bool aip = false;
  try {
    aip = check_aip(x);
  } catch (const Error& e) {
    j["aip_error"] = e.what();
  }
  j["aip"] = aip;
  j["bruck"] = !bol_w && aip;
  j["commutative"] = is_commutative(x);
  const auto assoc_w = associativity_violation(x);
  j["associative"] = !assoc_w;
  t << std::boolalpha << " bol=" << !bol_w << " aip=" << aip << " bruck=" << (!bol_w && aip)
    << " commutative=" << is_commutative(x) << " associative=" << !assoc_w;
  if (!bol_w) {
    j["exponent"] = exponent(x);
    t << " exponent=" << exponent(x);
  } else {
    const Triple& w = *bol_w;
    t << "\nbol fails at x=" << w[0] << " y=" << w[1] << " z=" << w[2];
  }
  t << '\n';
  emit(o, j, t.str());
  if (require.empty()) return 0;
  if (!j.contains(require) || !j[require].is_boolean()) throw CLI::ValidationError("--require", "unknown property " + require);
  if (!j[require].get<bool>()) throw CheckFailed{"required property " + require + " fails"};
  return 0;
}

int run_envelope(const Options& o, const std::string& path) {
  const Loop x = load_loop(path);
  const LoopFolder f = baer_envelope(x);
  if (o.json) {
    json j{{"degree", f.g.degree()},
           {"g_order", f.g.order()},
           {"h_order", f.h.order()},
           {"k_size", f.k.size()},
           {"faithful", is_faithful(f, o.bounds())},
           {"bruck_folder", is_bruck_folder(f)},
           {"bx2p_folder", is_bx2p_folder(f)}};
    std::cout << j.dump(2) << '\n';
  } else {
    io::write_folder(std::cout, f);
  }
  return 0;
}

int run_fold(const Options& o, const std::string& path) {
  LoopFolder f;
  if (path == "-") {
    f = io::read_folder(std::cin);
  } else {
    f = io::read_folder_file(path);
  }
  const Loop x = loop_from_folder(f, o.bounds());
  emit(o, json{{"order", x.order()}, {"table", rows(x)}}, io::format_loop(x));
  return 0;
}

int run_decompose(const Options& o, const std::string& path) {
  const Loop x = load_loop(path);
  const StructureReport r = decompose(x, o.bounds());
  const EnvelopeFactorization ef = check_envelope_factorization(x, o.bounds());
  json j = to_json(r);
  j["envelope_factorization"] = {
      {"ok", ef.ok}, {"g_order", ef.g_order}, {"odd_order", ef.odd_order}, {"two_order", ef.two_order}};
  std::ostringstream t;
  const EnvelopeShape& s = r.envelope_shape;
  t << "odd part (" << r.odd_part.size() << "): " << set_text(r.odd_part) << '\n'
    << "2-part (" << r.two_part.size() << "): " << set_text(r.two_part) << '\n'
    << "direct product: " << std::boolalpha << r.is_direct_product << '\n'
    << "envelope |G| = " << ef.g_order << " = " << ef.odd_order << " * " << ef.two_order << " (" << ef.ok << ")\n"
    << "2-part envelope: e=" << s.e << " |O2|=" << s.o2_order << " n_empty=" << r.n_empty
    << " quotient=" << s.quotient_ok << " hbar=" << s.hbar_ok << " fstar=" << s.fstar_ok << " kbar=" << s.kbar_ok
    << '\n';
  if (!s.diagnostics.empty()) t << "diagnostics: " << s.diagnostics << '\n';
  emit(o, j, t.str());
  if (!ef.ok) throw CheckFailed{"G is not O(G) x O^{2'}(G)"};
  if (!s.ok()) throw CheckFailed{s.diagnostics};
  return 0;
}

int run_sylow2(const Options& o, const std::string& path, bool exhaustive) {
  const Loop x = load_loop(path);
  const SubloopSet p = sylow2_subloop(x, o.bounds());
  json j{{"order", x.order()}, {"two_part", p_part(x.order(), 2)}, {"sylow2", set_json(p)}};
  std::ostringstream t;
  t << "Sylow 2-subloop (" << p.size() << "): " << set_text(p) << '\n';
  bool ok = true;
  if (exhaustive) {
    const std::size_t count = sylow2_all(x, o.bounds()).size();
    const bool conj = sylow2_conjugacy(x, o.bounds());
    const bool emb = sylow2_embedding(x, o.bounds());
    j["count"] = count;
    j["conjugate"] = conj;
    j["embedding"] = emb;
    t << "subloops of order " << p.size() << ": " << count << ", H-conjugate: " << std::boolalpha << conj
      << ", 2-subloops embed: " << emb << '\n';
    ok = conj && emb;
  }
  emit(o, j, t.str());
  if (!ok) throw CheckFailed{"Sylow 2-subloops are not all H-conjugate or do not contain every 2-subloop"};
  return 0;
}

int run_hall(const Options& o, const std::string& path, const std::vector<std::uint64_t>& primes) {
  const Loop x = load_loop(path);
  std::ostringstream t;
  if (!primes.empty()) {
    const auto h = hall_subloop(x, primes, o.bounds());
    json j{{"primes", primes}, {"hall", h ? set_json(*h) : json(nullptr)}};
    t << (h ? "Hall subloop (" + std::to_string(h->size()) + "): " + set_text(*h) : std::string("absent")) << '\n';
    emit(o, j, t.str());
    return 0;
  }
  const std::vector<std::uint64_t> ps = prime_divisors(x.order());
  const auto all = hall_subloops(x, o.bounds());
  const bool soluble = is_soluble(x);
  json list = json::array();
  bool complete = true;
  for (std::size_t mask = 0; mask < all.size(); ++mask) {
    std::vector<std::uint64_t> pi;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (mask >> i & 1U) pi.push_back(ps[i]);
    }
    list.push_back({{"primes", pi}, {"hall", all[mask] ? set_json(*all[mask]) : json(nullptr)}});
    complete = complete && all[mask].has_value();
    t << "pi = {";
    for (std::size_t i = 0; i < pi.size(); ++i) t << (i ? "," : "") << pi[i];
    t << "}: " << (all[mask] ? set_text(*all[mask]) : std::string("absent")) << '\n';
  }
  t << "soluble: " << std::boolalpha << soluble << '\n';
  emit(o, json{{"soluble", soluble}, {"subsets", list}}, t.str());
  if (soluble && !complete) throw CheckFailed{"a soluble loop lacks a Hall subloop"};
  return 0;
}

int run_subloops(const Options& o, const std::string& path) {
  const Loop x = load_loop(path);
  const std::vector<SubloopSet> subs = enumerate_subloops(x, o.bounds());
  json list = json::array();
  std::ostringstream t;
  for (const SubloopSet& s : subs) {
    list.push_back(s);
    t << s.size() << ": " << set_text(s) << '\n';
  }
  emit(o, json{{"order", x.order()}, {"count", subs.size()}, {"subloops", list}}, t.str());
  return 0;
}

int run_lagrange(const Options& o, const std::string& path) {
  const Loop x = load_loop(path);
  const LagrangeAudit a = lagrange_audit(x, o.bounds());
  json j{{"ok", a.ok}, {"subloops", a.subloops}, {"witness", a.witness ? set_json(*a.witness) : json(nullptr)}};
  std::ostringstream t;
  t << a.subloops << " subloops, orders divide " << x.order() << ": " << std::boolalpha << a.ok << '\n';
  if (a.witness) t << "witness (" << a.witness->size() << "): " << set_text(*a.witness) << '\n';
  emit(o, j, t.str());
  if (!a.ok) throw CheckFailed{"a subloop order does not divide |X|"};
  return 0;
}

int run_pgl(const Options& o, const std::vector<std::uint32_t>& qs, std::optional<std::uint64_t> n_empty) {
  json reports = json::array();
  std::ostringstream t;
  for (std::uint32_t q : qs) {
    const json r = pgl_report(q, o.bounds());
    reports.push_back(r);
    t << "q=" << q << " |PGL|=" << r["order"] << " outer class=" << r["outer_class_size"]
      << " Borel orbits on Syl2=" << r["borel_orbit_sizes"].dump() << " borel_sylow=" << r["borel_sylow_ok"]
      << " sylow_extension=" << r["sylow_extension_ok"] << '\n';
  }
  json j = qs.size() == 1 ? reports[0] : json{{"reports", reports}};
  bool ok = true;
  for (const json& r : reports) ok = ok && r["borel_sylow_ok"].get<bool>() && r["sylow_extension_ok"].get<bool>();
  if (n_empty) {
    const CountingTable c = counting_table(qs, *n_empty);
    j["counting"] = {{"qs", c.qs}, {"n_empty", c.n_empty}, {"cj", c.cj}, {"nj", c.nj},
                     {"sylow_lambda_count", sylow_lambda_count(c)}};
    t << "c_J=" << json(c.cj).dump() << " n_J=" << json(c.nj).dump() << " 2^e n_empty=" << sylow_lambda_count(c)
      << '\n';
  }
  emit(o, j, t.str());
  if (!ok) throw CheckFailed{"a PGL_2(q) Sylow check failed"};
  return 0;
}

int run_search_loops(const Options& o, SearchSpec spec, const std::string& out_path) {
  spec.node_budget = o.budget;
  const SearchResult r = enumerate_loops(spec);
  const json j = bol_from_search_report(spec, r);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + out_path);
    out << j.dump(2) << '\n';
  }
  std::ostringstream t;
  t << "order " << spec.order << ": " << j["count"] << " loops (" << j["associative_count"] << " associative, "
    << j["nonassociative_count"] << " not), " << r.nodes << " nodes\n";
  emit(o, j, t.str());
  return 0;
}

int run_search_envelope(const Options& o, const std::string& g_path, const std::string& h_path) {
  const PermGroup g = io::read_perm_group_file(g_path);
  const PermGroup h = io::read_perm_group_file(h_path);
  const std::vector<EnvelopeHit> hits = envelope_search(g, h, o.bounds());
  json list = json::array();
  std::ostringstream t;
  bool ok = true;
  for (const EnvelopeHit& hit : hits) {
    list.push_back({{"classes", hit.classes},
                    {"bol", hit.bol},
                    {"aip", hit.aip},
                    {"exponent2", hit.exponent2},
                    {"table", rows(hit.loop)}});
    t << "classes " << json(hit.classes).dump() << ": bol=" << std::boolalpha << hit.bol << " aip=" << hit.aip
      << " exponent2=" << hit.exponent2 << '\n';
    ok = ok && hit.bol && hit.aip && hit.exponent2;
  }
  t << hits.size() << " folders\n";
  emit(o, json{{"g_order", g.order()}, {"h_order", h.order()}, {"hits", list}}, t.str());
  if (!ok) throw CheckFailed{"an envelope of involution classes gives a loop that is not Bol of exponent 2"};
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Bruck loops, folders and PGL_2(q) checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--order-bound", o.order_bound, "largest loop order for subloop enumeration")->capture_default_str();
  app.add_option("--enum-bound", o.enum_bound, "largest group whose elements may be listed")->capture_default_str();
  app.add_option("--budget", o.budget, "node budget for searches")->capture_default_str();

  std::string path = "-";
  std::string require;
  auto* check = app.add_subcommand("check", "identity checks on a loop table");
  check->add_option("file", path, "loop file, - for stdin");
  check->add_option("--require", require, "exit 1 unless this property holds (bol, aip, bruck, ...)");

  auto* envelope = app.add_subcommand("envelope", "Baer envelope as a folder file");
  envelope->add_option("file", path, "loop file");
  auto* fold = app.add_subcommand("fold", "loop of a folder file");
  fold->add_option("file", path, "folder file, - for stdin");
  auto* dec = app.add_subcommand("decompose", "odd part x 2-part and the envelope shape");
  dec->add_option("file", path, "loop file");

  bool exhaustive = false;
  auto* syl = app.add_subcommand("sylow2", "Sylow 2-subloop");
  syl->add_option("file", path, "loop file");
  syl->add_flag("--all", exhaustive, "also check conjugacy and embedding exhaustively");

  std::vector<std::uint64_t> primes;
  auto* hall = app.add_subcommand("hall", "Hall pi-subloops");
  hall->add_option("file", path, "loop file");
  hall->add_option("--primes", primes, "pi; all subsets of the prime divisors when omitted")->delimiter(',');

  auto* subs = app.add_subcommand("subloops", "all subloops");
  subs->add_option("file", path, "loop file");
  auto* lag = app.add_subcommand("lagrange", "subloop orders divide the loop order");
  lag->add_option("file", path, "loop file");

  std::vector<std::uint32_t> qs;
  std::optional<std::uint64_t> n_empty;
  auto* pgl = app.add_subcommand("pgl", "PGL_2(q) class, orbit and counting checks");
  pgl->add_option("--q", qs, "field sizes")->required()->delimiter(',');
  pgl->add_option("--n-empty", n_empty, "also print the C_J / n_J table for this n_empty");

  SearchSpec spec;
  std::string out_path;
  auto* sl = app.add_subcommand("search-loops", "exhaustive Latin-square search");
  sl->add_option("--order", spec.order, "loop order")->required();
  sl->add_flag("--bol", spec.require_bol, "right Bol");
  sl->add_flag("--aip", spec.require_aip, "automorphic inverse property");
  sl->add_flag("--exp2", spec.require_exponent2, "exponent 2");
  sl->add_flag("--iso", spec.up_to_isomorphism, "one loop per isomorphism class");
  sl->add_option("--out", out_path, "also write the JSON fixture here");

  std::string g_path;
  std::string h_path;
  auto* se = app.add_subcommand("search-envelope", "folders with K a union of involution classes");
  se->add_option("group", g_path, "permutation group file for G")->required();
  se->add_option("subgroup", h_path, "permutation group file for H")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(o, path, require);
    if (*envelope) return run_envelope(o, path);
    if (*fold) return run_fold(o, path);
    if (*dec) return run_decompose(o, path);
    if (*syl) return run_sylow2(o, path, exhaustive);
    if (*hall) return run_hall(o, path, primes);
    if (*subs) return run_subloops(o, path);
    if (*lag) return run_lagrange(o, path);
    if (*pgl) return run_pgl(o, qs, n_empty);
    if (*sl) return run_search_loops(o, spec, out_path);
    if (*se) return run_search_envelope(o, g_path, h_path);
  } catch (const CheckFailed& f) {
    std::cerr << "check failed: " << f.what << '\n';
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
