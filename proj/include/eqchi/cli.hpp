#pragma once

// Command-line surface: group-spec parsing, table and matrix emission in CSV,
// JSON or aligned text, and the verification suites.

#include <cctype>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "eqchi/arith.hpp"
#include "eqchi/common.hpp"
#include "eqchi/equivariant.hpp"
#include "eqchi/group.hpp"
#include "eqchi/gsets.hpp"
#include "eqchi/posets.hpp"
#include "eqchi/stirling.hpp"
#include "eqchi/verify.hpp"

namespace eqchi::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kVerifyFail = 1, kUsage = 2, kResource = 3 };

enum class Format { csv, json, pretty };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "pretty") return Format::pretty;
  throw UsageError("unknown format '" + std::string(s) + "' (expected csv, json or pretty)");
}

struct Caps {
  std::size_t points = gsets::kDefaultPointCap;
  std::size_t group_order = groups::kDefaultSubgroupCap;
  std::size_t bell = 5;
  unsigned threads = 1;
  std::uint64_t seed = verify::Options{}.seed;
};

// ---------------------------------------------------------------------------
// Group specs

struct GroupSpec {
  std::string source;
  groups::PermGroup group;
};

namespace detail {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t offset) : s_(text), off_(offset) {}

  bool done() const { return i_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[i_]; }
  void skip_spaces() {
    while (!done() && s_[i_] == ' ') ++i_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::size_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::size_t>(s_[i_++] - '0');
      if (v > 1000000) fail("integer too large");
    }
    return v;
  }
  std::size_t position() const { return i_; }
  [[noreturn]] void fail(const std::string& what) const { fail_at(i_, what); }
  [[noreturn]] void fail_at(std::size_t i, const std::string& what) const {
    throw UsageError("group spec: " + what + " at position " + std::to_string(off_ + i + 1));
  }

 private:
  std::string_view s_;
  std::size_t off_;
  std::size_t i_ = 0;
};

inline groups::PermGroup named_factor(char family, std::size_t k, const Cursor& at) {
  if (k == 0) at.fail("family index must be >= 1");
  if (k > 12) at.fail("family index must be <= 12");
  switch (family) {
    case 'S': return groups::symmetric_group(k);
    case 'A': return groups::alternating_group(k);
    default: return groups::cyclic_group(k);
  }
}

inline groups::PermGroup parse_named(std::string_view text) {
  Cursor c(text, 0);
  auto family = [&] {
    char f = c.peek();
    if (f != 'S' && f != 'A' && f != 'C') c.fail("expected S, A, C or perm:");
    c.accept(f);
    return f;
  };
  char f = family();
  groups::PermGroup g = named_factor(f, c.integer(), c);
  while (!c.done()) {
    c.expect('x');
    if (!c.accept('C')) c.fail("expected 'C' after 'x'");
    g = groups::direct_product(g, named_factor('C', c.integer(), c));
  }
  return g;
}

inline groups::PermGroup parse_perm(std::string_view text) {
  const std::size_t base = 5;  // "perm:"
  auto body = text.substr(base);
  auto colon = body.find(':');
  if (colon == std::string_view::npos)
    throw UsageError("group spec: expected 'perm:<degree>:<cycles>' at position " + std::to_string(base + 1));
  Cursor dc(body.substr(0, colon), base);
  const std::size_t degree = dc.integer();
  if (!dc.done()) dc.fail("expected ':' after degree");
  if (degree == 0 || degree > partitions::kMaxPoints) dc.fail("degree must be in 1..32");
  Cursor c(body.substr(colon + 1), base + colon + 1);
  std::vector<Permutation> gens;
  while (true) {
    c.skip_spaces();
    std::vector<std::vector<Point>> cycles;
    std::vector<bool> seen(degree, false);
    if (c.peek() != '(') c.fail("expected '('");
    while (c.accept('(')) {
      std::vector<Point> cyc;
      c.skip_spaces();
      while (!c.accept(')')) {
        const std::size_t at = c.position();
        std::size_t x = c.integer();
        if (x == 0 || x > degree) c.fail_at(at, "point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
        if (seen[x - 1]) c.fail_at(at, "point " + std::to_string(x) + " repeated in one generator");
        seen[x - 1] = true;
        cyc.push_back(static_cast<Point>(x - 1));
        c.skip_spaces();
        if (c.accept(',')) c.skip_spaces();
        if (c.done()) c.fail("unterminated cycle");
      }
      if (cyc.size() > 1) cycles.push_back(std::move(cyc));
      c.skip_spaces();
    }
    gens.push_back(Permutation::from_cycles(degree, cycles));
    if (c.done()) break;
    c.expect(',');
  }
  return groups::PermGroup::generate(degree, std::move(gens));
}

}  // namespace detail

/// spec := NAMED | "perm:" INT ":" CYCLES, with 1-indexed points.
inline GroupSpec parse_group_spec(std::string_view text) {
  if (text.empty()) throw UsageError("group spec: empty");
  if (text.starts_with("perm:")) return {std::string(text), detail::parse_perm(text)};
  return {std::string(text), detail::parse_named(text)};
}

/// The G-set named by "natural" or a sum such as "2*S3+S6" of multiples of
/// coset G-sets, using the class labels S<index>[a-z].
inline gsets::GSetAction parse_gset_spec(const gsets::GroupPtr& g, std::string_view text) {
  if (text == "natural") return gsets::GSetAction::natural(g);
  const auto labels = stirling::class_labels(*g);
  gsets::Fingerprint fp(labels.size(), 0);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string term(text.substr(pos, end - pos));
    std::size_t mult = 1;
    if (auto star = term.find('*'); star != std::string::npos) {
      try {
        mult = std::stoul(term.substr(0, star));
      } catch (const std::exception&) {
        throw UsageError("gset spec: bad multiplicity in '" + term + "'");
      }
      term = term.substr(star + 1);
    }
    auto it = std::find(labels.begin(), labels.end(), term);
    if (it == labels.end() || mult == 0)
      throw UsageError("gset spec: unknown orbit '" + term + "' (classes: " + verify::detail::join(labels) + ")");
    fp[static_cast<std::size_t>(it - labels.begin())] += static_cast<std::uint16_t>(mult);
    pos = end + 1;
  }
  return gsets::gset_from_fingerprint(g, fp);
}

/// Orbit multiplicities in the syntax accepted by parse_gset_spec.
inline std::string gset_label(const groups::FiniteGroup& g, const gsets::Fingerprint& fp) {
  const auto labels = stirling::class_labels(g);
  std::string out;
  for (std::size_t c = 0; c < fp.size(); ++c) {
    if (fp[c] == 0) continue;
    if (!out.empty()) out += "+";
    if (fp[c] > 1) out += std::to_string(fp[c]) + "*";
    out += labels[c];
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Emission helpers

inline json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

inline json rational_json(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) return integer_json(boost::multiprecision::numerator(v));
  return json(to_string(v));
}

inline void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

/// Right-aligned columns separated by two spaces.
inline void write_pretty(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << r[c];
    out << '\n';
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

inline void write_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_field(r[c]);
    out << '\n';
  }
}

inline void write_rows(std::ostream& out, Format f, const std::vector<std::vector<std::string>>& rows) {
  if (f == Format::pretty) write_pretty(out, rows);
  else write_csv(out, rows);
}

// ---------------------------------------------------------------------------
// Subcommands. Each writes data to out, diagnostics to err, and returns an
// exit code; errors propagate as exceptions to run_guarded.

inline int run_table(int rmax, int nmax, Format f, std::ostream& out, std::ostream& err) {
  if (rmax < 1) throw UsageError("table: rmax must be >= 1");
  if (nmax < 2) throw UsageError("table: nmax must be >= 2");
  if (nmax > 100000) throw UsageError("table: nmax must be <= 100000");
  std::vector<std::vector<Integer>> grid;
  for (int r = 1; r <= rmax; ++r) {
    std::vector<Integer> row;
    for (int n = 2; n <= nmax; ++n) row.push_back(arith::chi_tilde_closed(r, n));
    grid.push_back(std::move(row));
  }
  const std::string note =
      "flagged-erratum: the printed r=1 row (1,-1,0,...) sits one column to the right of the computed "
      "values; computed chi~_1 is -1 at n=2 and 0 for n>=3";
  if (f == Format::json) {
    json j;
    j["query"] = {{"command", "table"}, {"rmax", rmax}, {"nmax", nmax}};
    j["method"] = "closed";
    json rows = json::array();
    for (int r = 1; r <= rmax; ++r) {
      json vals = json::array();
      for (const auto& v : grid[r - 1]) vals.push_back(integer_json(v));
      rows.push_back({{"r", r}, {"values", vals}});
    }
    j["value"] = rows;
    j["denominator"] = 1;
    json cols = json::array();
    for (int n = 2; n <= nmax; ++n) cols.push_back(n);
    j["columns"] = cols;
    j["notes"] = json::array({note});
    write_json(out, j);
    return kPass;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"r"};
  for (int n = 2; n <= nmax; ++n) header.push_back("n=" + std::to_string(n));
  rows.push_back(header);
  for (int r = 1; r <= rmax; ++r) {
    std::vector<std::string> row{std::to_string(r)};
    for (const auto& v : grid[r - 1]) row.push_back(v.str());
    rows.push_back(std::move(row));
  }
  write_rows(out, f, rows);
  err << note << '\n';
  return kPass;
}

inline equivariant::Method parse_method(std::string_view s) {
  using equivariant::Method;
  if (s == "bruteforce") return Method::bruteforce;
  if (s == "abelian") return Method::abelian;
  if (s == "isoclasses") return Method::isoclasses;
  if (s == "closed") return Method::closed;
  throw UsageError("unknown method '" + std::string(s) + "' (expected bruteforce, abelian, isoclasses, closed, all)");
}

inline equivariant::EquivariantResult compute_chi(std::size_t n, unsigned r, equivariant::Method m, const Caps& caps) {
  using equivariant::Method;
  if (n < 2) throw DomainError("chi: n must be >= 2");
  if (r < 1) throw DomainError("chi: r must be >= 1");
  if (m == Method::closed) return equivariant::chi_r_closed(n, r);
  if (m == Method::isoclasses) return equivariant::chi_r_isoclasses(n, r);
  if (n > caps.bell)
    throw ResourceError("chi: method " + equivariant::method_name(m) + " enumerates Bell(" + std::to_string(n) +
                        ") partitions; --cap-bell is " + std::to_string(caps.bell));
  auto g = groups::FiniteGroup::make(groups::symmetric_group(n), caps.group_order);
  auto s = gsets::GSetAction::natural(g);
  if (m == Method::abelian) return equivariant::chi_r_abelian(s, r, caps.group_order);
  equivariant::BruteforceCaps bc;
  bc.order_r3 = std::min(bc.order_r3, caps.group_order);
  bc.order_r4 = std::min(bc.order_r4, caps.group_order);
  return equivariant::chi_r_bruteforce(s, r, bc, caps.threads);
}

inline int run_chi(std::size_t n, unsigned r, const std::string& method, Format f, const Caps& caps,
                   std::ostream& out, std::ostream&) {
  std::vector<equivariant::Method> methods;
  if (method == "all") {
    using equivariant::Method;
    methods = {Method::bruteforce, Method::abelian, Method::isoclasses, Method::closed};
  } else {
    methods = {parse_method(method)};
  }
  std::vector<equivariant::EquivariantResult> res;
  for (auto m : methods) res.push_back(compute_chi(n, r, m, caps));
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& x : res) {
      json j;
      j["query"] = {{"command", "chi"}, {"n", n}, {"r", r}};
      j["method"] = equivariant::method_name(x.method);
      j["value"] = rational_json(x.value);
      j["denominator"] = integer_json(x.denominator());
      arr.push_back(j);
    }
    write_json(out, res.size() == 1 ? arr[0] : arr);
    return kPass;
  }
  std::vector<std::vector<std::string>> rows{{"n", "r", "method", "value", "denominator"}};
  for (const auto& x : res)
    rows.push_back({std::to_string(n), std::to_string(r), equivariant::method_name(x.method), to_string(x.value),
                    x.denominator().str()});
  write_rows(out, f, rows);
  return kPass;
}

inline int run_stirling_matrix(const std::string& group, std::size_t degree, Format f, const Caps& caps,
                               std::ostream& out, std::ostream&) {
  auto g = groups::FiniteGroup::make(parse_group_spec(group).group, caps.group_order);
  stirling::GStirlingMatrix m(g, degree);
  const auto labels = m.labels();
  if (f == Format::json) {
    json j;
    j["query"] = {{"command", "stirling-matrix"}, {"group", group}, {"degree", degree}};
    j["method"] = "table-of-marks";
    json rows = json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.size(); ++c) row.push_back(integer_json(m.at(r, c)));
      rows.push_back(row);
    }
    j["value"] = {{"labels", labels}, {"rows", rows}};
    j["denominator"] = 1;
    write_json(out, j);
    return kPass;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  header.insert(header.end(), labels.begin(), labels.end());
  rows.push_back(header);
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::vector<std::string> row{labels[r]};
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  write_rows(out, f, rows);
  return kPass;
}

inline int run_higher_moebius(const std::string& group, std::size_t degree, const std::string& method, Format f,
                              const Caps& caps, std::ostream& out, std::ostream&) {
  stirling::MoebiusMethod m;
  if (method == "solve") m = stirling::MoebiusMethod::solve;
  else if (method == "direct") m = stirling::MoebiusMethod::direct;
  else throw UsageError("unknown method '" + method + "' (expected solve or direct)");
  auto g = groups::FiniteGroup::make(parse_group_spec(group).group, caps.group_order);
  if (degree == 0) throw DomainError("higher-moebius: degree must be >= 1");
  auto t = stirling::higher_moebius(g, degree, m, caps.points);
  const auto cl = stirling::class_labels(*g);
  const auto weights = t.weighting_column();
  if (f == Format::json) {
    json j;
    j["query"] = {{"command", "higher-moebius"}, {"group", group}, {"degree", degree}};
    j["method"] = method;
    json labels = json::array(), mus = json::array(), ws = json::array();
    std::size_t k = 0;
    for (std::size_t h = 0; h < cl.size(); ++h)
      for (std::size_t i = 1; i <= degree; ++i, ++k) {
        labels.push_back(std::to_string(i) + cl[h]);
        mus.push_back(integer_json(t.mu(h, i)));
        ws.push_back(integer_json(weights[k]));
      }
    j["value"] = {{"labels", labels}, {"mu", mus}, {"weighting", ws}};
    j["denominator"] = 1;
    write_json(out, j);
    return kPass;
  }
  std::vector<std::vector<std::string>> rows{{"label", "H", "i", "mu", "weighting"}};
  std::size_t k = 0;
  for (std::size_t h = 0; h < cl.size(); ++h)
    for (std::size_t i = 1; i <= degree; ++i, ++k)
      rows.push_back({std::to_string(i) + cl[h], cl[h], std::to_string(i), t.mu(h, i).str(), weights[k].str()});
  write_rows(out, f, rows);
  return kPass;
}

inline int run_gpartitions(const std::string& group, const std::string& gset, Format f, const Caps& caps,
                           std::ostream& out, std::ostream&) {
  auto g = groups::FiniteGroup::make(parse_group_spec(group).group, caps.group_order);
  auto s = parse_gset_spec(g, gset);
  auto p = gsets::g_partition_poset(s, {true, false, caps.points, partitions::kDefaultPosetElementCap});
  auto w = posets::weighting(p);
  const Integer chi = w.euler - 1;
  if (f == Format::json) {
    json j;
    j["query"] = {{"command", "gpartitions"}, {"group", group}, {"gset", gset}, {"points", s.degree()}};
    j["method"] = "enumeration";
    json elems = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto bt = gsets::block_gset_type(s, p.element(i));
      elems.push_back({{"partition", p.element(i).to_string()},
                       {"blocks", gset_label(*g, bt.fingerprint)},
                       {"isotypical", bt.action.is_isotypical()},
                       {"k_up", integer_json(w.up[i])},
                       {"k_down", integer_json(w.down[i])}});
    }
    j["value"] = {{"chi_tilde", integer_json(chi)}, {"isotypical", s.is_isotypical()}, {"elements", elems}};
    j["denominator"] = 1;
    write_json(out, j);
    return kPass;
  }
  std::vector<std::vector<std::string>> rows{{"partition", "blocks", "isotypical", "k_up", "k_down"}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto bt = gsets::block_gset_type(s, p.element(i));
    rows.push_back({p.element(i).to_string(), gset_label(*g, bt.fingerprint),
                    bt.action.is_isotypical() ? "yes" : "no", w.up[i].str(), w.down[i].str()});
  }
  rows.push_back({"chi~", chi.str(), s.is_isotypical() ? "yes" : "no", "", ""});
  write_rows(out, f, rows);
  return kPass;
}

inline int run_verify(const std::string& suite, Format f, const Caps& caps, std::ostream& out, std::ostream& err) {
  verify::Options opt;
  opt.cap_points = caps.points;
  opt.cap_group_order = std::min<std::size_t>(caps.group_order, 120);
  opt.cap_bell = caps.bell;
  opt.threads = caps.threads;
  opt.seed = caps.seed;
  auto reps = verify::run_suite(suite, opt);
  bool ok = true;
  for (const auto& r : reps) ok = ok && r.ok();
  if (f == Format::json) {
    json arr = json::array();
    for (const auto& r : reps) {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back(
            {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"status", verify::status_name(c.status)}});
      arr.push_back({{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}});
    }
    write_json(out, {{"query", {{"command", "verify"}, {"suite", suite}, {"seed", caps.seed}}},
                     {"method", "verification"},
                     {"value", arr},
                     {"denominator", 1}});
  } else if (f == Format::csv) {
    std::vector<std::vector<std::string>> rows{{"criterion", "check", "status", "expected", "actual"}};
    for (const auto& r : reps)
      for (const auto& c : r.checks) rows.push_back({r.suite, c.name, verify::status_name(c.status), c.expected, c.actual});
    write_csv(out, rows);
  } else {
    for (const auto& r : reps) {
      out << "== " << r.suite << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.count(verify::Status::pass)
          << " pass, " << r.count(verify::Status::fail) << " fail, " << r.count(verify::Status::flagged_erratum)
          << " flagged)\n";
      for (const auto& c : r.checks)
        out << "  [" << verify::status_name(c.status) << "] " << c.name << ": expected " << c.expected << ", got "
            << c.actual << '\n';
    }
  }
  for (const auto& r : reps) err << r.suite << " took " << verify::detail::seconds_text(r.wall_seconds) << '\n';
  return ok ? kPass : kVerifyFail;
}

/// Runs f, mapping library errors to exit codes: usage and domain errors to
/// 2, resource caps to 3, internal inconsistencies to 1.
inline int run_guarded(const std::function<int()>& f, std::ostream& err) {
  try {
    return f();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const ConsistencyError& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return kVerifyFail;
  }
}

}  // namespace eqchi::cli
