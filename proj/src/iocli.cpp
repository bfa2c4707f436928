#include "ydh/iocli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "ydh/catalog.hpp"
#include "ydh/commalg.hpp"
#include "ydh/error.hpp"
#include "ydh/integrals.hpp"

namespace ydh {

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;
constexpr const char* kReportSchema = "ydh-report/1";

struct Token {
  std::string text;
  int col;  // 1-based
};

struct Line {
  int number;
  std::string text;
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i >= s.size()) break;
    const size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    out.push_back({s.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) {
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string s(text.substr(pos, end - pos));
      ++number;
      if (!s.empty() && s.back() == '\r') s.pop_back();
      std::vector<Token> toks = tokenize(s);
      if (!toks.empty() && toks[0].text[0] != '#') lines_.push_back({number, s, std::move(toks)});
      if (end == text.size()) break;
      pos = end + 1;
    }
    last_line_ = number;
  }

  bool done() const { return next_ >= lines_.size(); }
  const Line& peek() const { return lines_.at(next_); }
  const Line& take(const std::string& expected) {
    if (done()) throw ParseError(last_line_, 1, expected);
    return lines_[next_++];
  }

 private:
  std::vector<Line> lines_;
  size_t next_ = 0;
  int last_line_ = 0;
};

[[noreturn]] void fail(const Line& l, size_t tok, const std::string& expected) {
  const int col = tok < l.tokens.size() ? l.tokens[tok].col : static_cast<int>(l.text.size()) + 1;
  throw ParseError(l.number, col, expected);
}

void expect_keyword(const Line& l, const std::string& kw) {
  if (l.tokens[0].text != kw) fail(l, 0, "'" + kw + "'");
}

long read_int(const Line& l, size_t tok, const std::string& what) {
  if (tok >= l.tokens.size()) fail(l, tok, what);
  const std::string& t = l.tokens[tok].text;
  size_t i = (t[0] == '-') ? 1 : 0;
  if (i == t.size() || t.size() > 9) fail(l, tok, what);
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) fail(l, tok, what);
  return std::stol(t);
}

int read_index(const Line& l, size_t tok, int bound, const std::string& what) {
  const long v = read_int(l, tok, what);
  if (v < 0 || v >= bound)
    throw DimensionMismatch("line " + std::to_string(l.number) + ", column " + std::to_string(l.tokens[tok].col) +
                            ": " + what + " " + std::to_string(v) + " outside [0, " + std::to_string(bound) + ")");
  return static_cast<int>(v);
}

void expect_end(const Line& l, size_t count) {
  if (l.tokens.size() != count) fail(l, count, "end of line");
}

// Scalar occupying the rest of the line from token `tok`.
CycNum read_scalar(const Line& l, size_t tok, int order) {
  if (tok >= l.tokens.size()) fail(l, tok, "scalar");
  const int start = l.tokens[tok].col;
  try {
    return CycNum::parse(std::string_view(l.text).substr(start - 1), order);
  } catch (const ParseError& e) {
    throw ParseError(l.number, start + e.column() - 1, e.expected());
  }
}

// Block of sparse entries "i_1 .. i_arity scalar" closed by "end".
template <class Store>
void read_entries(Reader& r, int arity, const std::vector<int>& bounds, int order, Store store) {
  std::set<std::vector<int>> seen;
  while (true) {
    const Line& l = r.take("'end'");
    if (l.tokens[0].text == "end") {
      expect_end(l, 1);
      return;
    }
    std::vector<int> idx;
    for (int a = 0; a < arity; ++a) idx.push_back(read_index(l, a, bounds[a], "index"));
    CycNum v = read_scalar(l, arity, order);
    if (!seen.insert(idx).second) fail(l, 0, "an entry not given before");
    store(idx, v);
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void render_matrix_entries(std::ostringstream& out, const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out << i << ' ' << j << ' ' << m(i, j).str() << '\n';
}

void render_action(std::ostringstream& out, const std::string& kw, int gen, const Mat& m) {
  if (auto p = m.as_permutation()) {
    out << kw << ' ' << gen << " perm " << join_ints(*p) << '\n';
    return;
  }
  out << kw << ' ' << gen << " matrix\n";
  render_matrix_entries(out, m);
  out << "end\n";
}

bool valid_name(const std::string& s) {
  if (s.empty() || s[0] == '#') return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

YDHopfAlgebra parse_ydh(std::string_view text) {
  Reader r(text);
  const Line& l0 = r.take("'ydh'");
  expect_keyword(l0, "ydh");
  if (read_int(l0, 1, "format version") != kFormatVersion) fail(l0, 1, "format version 1");
  expect_end(l0, 2);

  const Line& l1 = r.take("'order'");
  expect_keyword(l1, "order");
  const long order = read_int(l1, 1, "cyclotomic order");
  if (order < 1) fail(l1, 1, "positive cyclotomic order");
  expect_end(l1, 2);
  const int n = static_cast<int>(order);

  const Line& l2 = r.take("'group'");
  expect_keyword(l2, "group");
  if (l2.tokens.size() < 2) fail(l2, 1, "group");
  FinAbGroup g;
  try {
    g = FinAbGroup::parse(std::string_view(l2.text).substr(l2.tokens[1].col - 1));
  } catch (const ParseError& e) {
    throw ParseError(l2.number, l2.tokens[1].col + e.column() - 1, e.expected());
  }
  if (std::lcm(2, n) % g.exponent() != 0)
    throw NonDivisibleOrders("line " + std::to_string(l2.number) + ": the exponent of the group must divide the order");

  const Line& l3 = r.take("'side'");
  expect_keyword(l3, "side");
  if (l3.tokens.size() < 2 || (l3.tokens[1].text != "left" && l3.tokens[1].text != "right"))
    fail(l3, 1, "'left' or 'right'");
  expect_end(l3, 2);
  const ModSide side = l3.tokens[1].text == "left" ? ModSide::Left : ModSide::Right;

  const Line& l4 = r.take("'dim'");
  expect_keyword(l4, "dim");
  const long dl = read_int(l4, 1, "dimension");
  if (dl < 1 || dl > 4096) fail(l4, 1, "dimension in [1, 4096]");
  expect_end(l4, 2);
  const int d = static_cast<int>(dl);

  std::vector<std::string> names;
  if (!r.done() && r.peek().tokens[0].text == "basis") {
    const Line& lb = r.take("'basis'");
    if (static_cast<int>(lb.tokens.size()) - 1 != d)
      throw DimensionMismatch("line " + std::to_string(lb.number) + ": basis lists " +
                              std::to_string(lb.tokens.size() - 1) + " names for dimension " + std::to_string(d));
    for (size_t t = 1; t < lb.tokens.size(); ++t) names.push_back(lb.tokens[t].text);
  }

  std::vector<std::optional<Mat>> phi(g.rank()), psi(g.rank());
  std::optional<Tensor3> mult, comult;
  std::optional<Vec> unit, counit;
  std::optional<Mat> antipode;
  while (!r.done()) {
    const Line& l = r.take("section");
    const std::string& kw = l.tokens[0].text;
    if (kw == "phi" || kw == "psi") {
      auto& slot = kw == "phi" ? phi : psi;
      const int gen = read_index(l, 1, g.rank(), "generator");
      if (slot[gen]) fail(l, 1, "a generator not given before");
      if (l.tokens.size() < 3 || (l.tokens[2].text != "perm" && l.tokens[2].text != "matrix"))
        fail(l, 2, "'perm' or 'matrix'");
      if (l.tokens[2].text == "perm") {
        if (static_cast<int>(l.tokens.size()) != 3 + d)
          throw DimensionMismatch("line " + std::to_string(l.number) + ": permutation needs " + std::to_string(d) +
                                  " images");
        std::vector<int> images;
        std::vector<char> hit(d, 0);
        for (int i = 0; i < d; ++i) {
          images.push_back(read_index(l, 3 + i, d, "image"));
          if (hit[images.back()]++) fail(l, 3 + i, "a permutation");
        }
        slot[gen] = Mat::permutation(images, n);
      } else {
        expect_end(l, 3);
        Mat m(d, d, n);
        read_entries(r, 2, {d, d}, n, [&](const std::vector<int>& i, const CycNum& v) { m(i[0], i[1]) = v; });
        slot[gen] = m;
      }
    } else if (kw == "mult" || kw == "comult") {
      auto& t = kw == "mult" ? mult : comult;
      if (t) fail(l, 0, "a section not given before");
      expect_end(l, 1);
      t = Tensor3(d, d, d, n);
      read_entries(r, 3, {d, d, d}, n, [&](const std::vector<int>& i, const CycNum& v) { (*t)(i[0], i[1], i[2]) = v; });
    } else if (kw == "unit" || kw == "counit") {
      auto& v = kw == "unit" ? unit : counit;
      if (v) fail(l, 0, "a section not given before");
      expect_end(l, 1);
      v = zero_vec(d, n);
      read_entries(r, 1, {d}, n, [&](const std::vector<int>& i, const CycNum& x) { (*v)[i[0]] = x; });
    } else if (kw == "antipode") {
      if (antipode) fail(l, 0, "a section not given before");
      expect_end(l, 1);
      antipode = Mat(d, d, n);
      read_entries(r, 2, {d, d}, n, [&](const std::vector<int>& i, const CycNum& x) { (*antipode)(i[0], i[1]) = x; });
    } else {
      fail(l, 0, "'phi', 'psi', 'mult', 'unit', 'comult', 'counit' or 'antipode'");
    }
  }
  if (!mult || !unit || !comult || !counit) {
    std::string missing = !mult ? "mult" : !unit ? "unit" : !comult ? "comult" : "counit";
    throw ParseError(0, 0, "a '" + missing + "' section");
  }
  std::vector<Mat> phi_gens, psi_gens;
  for (int i = 0; i < g.rank(); ++i) {
    phi_gens.push_back(phi[i] ? *phi[i] : Mat::identity(d, n));
    psi_gens.push_back(psi[i] ? *psi[i] : Mat::identity(d, n));
  }
  YDModule mod(g, n, d, side, phi_gens, psi_gens);
  return YDHopfAlgebra(mod, *mult, *unit, *comult, *counit, antipode, names);
}

std::string render_ydh(const YDHopfAlgebra& a) {
  const int d = a.dim();
  std::ostringstream out;
  out << "ydh " << kFormatVersion << '\n';
  out << "order " << a.order() << '\n';
  out << "group " << a.group().str() << '\n';
  out << "side " << (a.side() == ModSide::Left ? "left" : "right") << '\n';
  out << "dim " << d << '\n';
  if (!a.basis_names().empty()) {
    out << "basis";
    for (const auto& s : a.basis_names()) {
      if (!valid_name(s)) throw PreconditionViolated("basis name '" + s + "' cannot be written");
      out << ' ' << s;
    }
    out << '\n';
  }
  const std::vector<Mat> phi = a.module().phi_generators(), psi = a.module().psi_generators();
  for (size_t i = 0; i < phi.size(); ++i) render_action(out, "phi", static_cast<int>(i), phi[i]);
  for (size_t i = 0; i < psi.size(); ++i) render_action(out, "psi", static_cast<int>(i), psi[i]);
  auto tensor = [&](const std::string& kw, const Tensor3& t) {
    out << kw << '\n';
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          if (!t(i, j, k).is_zero()) out << i << ' ' << j << ' ' << k << ' ' << t(i, j, k).str() << '\n';
    out << "end\n";
  };
  auto vec = [&](const std::string& kw, const Vec& v) {
    out << kw << '\n';
    for (int i = 0; i < d; ++i)
      if (!v[i].is_zero()) out << i << ' ' << v[i].str() << '\n';
    out << "end\n";
  };
  tensor("mult", a.mult());
  vec("unit", a.unit());
  tensor("comult", a.comult());
  vec("counit", a.counit());
  if (a.has_antipode()) {
    out << "antipode\n";
    render_matrix_entries(out, a.antipode());
    out << "end\n";
  }
  return out.str();
}

YDHopfAlgebra read_ydh_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionViolated("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ydh(ss.str());
}

void write_ydh_file(const std::string& path, const YDHopfAlgebra& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionViolated("cannot write " + path);
  out << render_ydh(a);
}

namespace {

json failures_json(const CheckReport& r) {
  json arr = json::array();
  for (const auto& c : r.checks)
    if (!c.pass) arr.push_back({{"name", c.name}, {"witness", c.witness}, {"detail", c.detail}});
  return arr;
}

json report_json(const CheckReport& r) {
  return {{"pass", r.pass()}, {"checks", r.checks.size()}, {"failures", failures_json(r)}};
}

json vec_json(const Vec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

json subgroup_json(const Subgroup& s) {
  json arr = json::array();
  for (int x : s.elems) arr.push_back(s.group.elem_str(x, s.side == Side::Dual));
  return arr;
}

// Error class name from a message of the form "Name: detail".
std::string error_name(const std::exception& e) {
  std::string s = e.what();
  return s.substr(0, s.find(':'));
}

}  // namespace

json analysis_report(const YDHopfAlgebra& input, const ReportOptions& opts) {
  json out;
  out["schema"] = kReportSchema;
  const int d = input.dim();
  const int gorder = input.group().order();
  out["instance"] = {{"dim", d},
                     {"group", input.group().str()},
                     {"group_order", gorder},
                     {"field_order", input.order()},
                     {"side", input.side() == ModSide::Left ? "left" : "right"}};

  CheckReport axioms = verify_axioms(input);
  out["axioms"] = report_json(axioms);
  int axiom_failures = static_cast<int>(failures_json(axioms).size());
  int theorem_failures = 0;
  CheckReport theorems;
  if (!axioms.pass()) {
    out["status"] = {{"axiom_failures", axiom_failures}, {"theorem_failures", 0}};
    return out;
  }
  const YDHopfAlgebra a = input.has_antipode() ? input : input.with_antipode(solve_antipode(input));

  const Triviality t = is_trivial(a);
  out["triviality"] = {{"trivial", t.trivial},
                       {"witness", t.witness ? json::array({t.witness->first, t.witness->second}) : json()}};
  const int g = std::gcd(d, gorder);
  theorems.add("coprime_instances_are_trivial", g > 1 || t.trivial);
  out["consistency"] = {{"gcd_dim_group", g},
                        {"line", t.trivial ? "trivial; no constraint on gcd(dim, |G|) = " + std::to_string(g)
                                           : "nontrivial with gcd(dim, |G|) = " + std::to_string(g) +
                                                 (g > 1 ? " > 1, consistent" : " = 1, inconsistent")}};

  try {
    IntegralPair ip = compute_integrals(a);
    CheckReport ir = verify_integral_properties(a, ip);
    out["integrals"] = {{"semisimple", true},
                        {"Lambda", vec_json(ip.element)},
                        {"lambda", vec_json(ip.functional)},
                        {"report", report_json(ir)}};
    theorems.merge(ir, "integrals.");
  } catch (const NotSemisimple& e) {
    out["integrals"] = {{"semisimple", false}, {"reason", e.what()}};
  }

  json commalg;
  try {
    Analysis an = primitive_idempotents(a);
    SuiteOptions so;
    so.tensor_ideals = opts.tensor_ideals;
    so.subset_cap = opts.subset_cap;
    SuiteResult suite = structure_suite(an, so);
    commalg["applicable"] = true;
    commalg["base_swapped"] = an.base_swapped;
    commalg["lambda_index"] = an.lambda_index;
    json recs = json::array();
    for (const auto& rec : an.records)
      recs.push_back({{"id", rec.id},
                      {"e", vec_json(rec.e)},
                      {"eta", vec_json(rec.eta)},
                      {"inertia", subgroup_json(rec.inertia)},
                      {"isotropy", subgroup_json(rec.isotropy)},
                      {"index", rec.index},
                      {"orbit", rec.orbit},
                      {"full_orbit", rec.full_orbit},
                      {"stability_set", rec.stability_set}});
    commalg["idempotents"] = recs;
    json matrix = json::array();
    for (int e = 0; e < an.dim(); ++e) {
      json row = json::array();
      for (int ep = 0; ep < an.dim(); ++ep) {
        const PairSummary& p = suite.pairs[static_cast<size_t>(e) * an.dim() + ep];
        row.push_back({{"m", p.m},
                       {"omegas", p.omegas},
                       {"is_character", p.criterion.is_character},
                       {"perp_in_inertia", p.criterion.perp_in_inertia},
                       {"braid_is_flip", p.criterion.braid_is_flip}});
      }
      matrix.push_back(row);
    }
    commalg["character_products"] = matrix;
    json cores = json::array();
    for (const auto& c : suite.cores)
      cores.push_back({{"e", c.e},
                       {"e_prime", c.e_prime},
                       {"m", c.m},
                       {"omegas", c.omegas},
                       {"freeness_rank", c.freeness_rank},
                       {"subalgebra_verified", c.subalgebra_verified}});
    commalg["cores"] = cores;
    theorems.merge(an.report, "");
    theorems.merge(suite.report, "");
  } catch (const NotCommutative& e) {
    commalg = {{"applicable", false}, {"reason", error_name(e)}};
  } catch (const NotSemisimple& e) {
    commalg = {{"applicable", false}, {"reason", error_name(e)}};
  }
  out["commutative_analysis"] = commalg;

  json sub;
  if (d > 1) {
    try {
      TrivialSubalgebra ts = find_trivial_subalgebra(a);
      sub = {{"applicable", true},
             {"dim", ts.algebra.dim()},
             {"idempotent", ts.idempotent},
             {"via_core_of", ts.via_core_of},
             {"trivial", is_trivial(ts.algebra).trivial}};
      theorems.merge(ts.report, "trivial_subalgebra.");
    } catch (const PreconditionViolated& e) {
      sub = {{"applicable", false}, {"reason", error_name(e)}};
    } catch (const NonSplitField& e) {
      // the dual needs a larger field; not a failure of this instance
      sub = {{"applicable", false}, {"reason", error_name(e)}};
    } catch (const NotCommutative& e) {
      sub = {{"applicable", false}, {"reason", error_name(e)}};
    } catch (const NotSemisimple& e) {
      sub = {{"applicable", false}, {"reason", error_name(e)}};
    }
  } else {
    sub = {{"applicable", false}, {"reason", "dimension 1"}};
  }
  out["cocommutative_analysis"] = sub;

  out["theorem_checks"] = report_json(theorems);
  theorem_failures = static_cast<int>(out["theorem_checks"]["failures"].size());
  out["status"] = {{"axiom_failures", axiom_failures}, {"theorem_failures", theorem_failures}};
  return out;
}

ReportStatus report_status(const json& canonical) {
  ReportStatus s;
  s.axiom_failures = canonical.at("status").at("axiom_failures").get<int>();
  s.theorem_failures = canonical.at("status").at("theorem_failures").get<int>();
  return s;
}

std::string render_report(const json& canonical, double seconds) {
  json doc;
  doc["canonical"] = canonical;
  doc["timing"] = {{"seconds", seconds}};
  return doc.dump(2) + "\n";
}

namespace {

enum Exit { kPass = 0, kFailure = 1, kUsage = 2, kNonSplit = 3 };

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_failures(const CheckReport& r) {
  for (const auto& c : r.checks)
    if (!c.pass) {
      std::cerr << "FAIL " << c.name;
      for (int w : c.witness) std::cerr << ' ' << w;
      if (!c.detail.empty()) std::cerr << " (" << c.detail << ")";
      std::cerr << '\n';
    }
}

int threads_from_env() {
  const char* s = std::getenv("YDH_THREADS");
  if (!s || !*s) return 1;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1) throw CLI::ValidationError("YDH_THREADS", "must be a positive integer");
  return static_cast<int>(v);
}

int cmd_verify(const std::string& file) {
  YDHopfAlgebra a = read_ydh_file(file);
  CheckReport r = verify_axioms(a);
  std::cout << file << ": " << r.checks.size() << " axiom checks, " << (r.pass() ? "pass" : "FAIL") << '\n';
  print_failures(r);
  return r.pass() ? kPass : kFailure;
}

int cmd_analyze(const std::string& file, bool tensor_ideals, const std::string& json_out) {
  const auto t0 = std::chrono::steady_clock::now();
  YDHopfAlgebra a = read_ydh_file(file);
  ReportOptions opts;
  opts.tensor_ideals = tensor_ideals;
  json rep = analysis_report(a, opts);
  const ReportStatus st = report_status(rep);
  const double secs = seconds_since(t0);
  std::cout << file << ": dim " << a.dim() << " over " << a.group().str();
  if (rep.contains("triviality")) std::cout << (rep["triviality"]["trivial"].get<bool>() ? ", trivial" : ", nontrivial");
  std::cout << ", axiom failures " << st.axiom_failures << ", theorem failures " << st.theorem_failures << '\n';
  if (rep.contains("consistency")) std::cout << rep["consistency"]["line"].get<std::string>() << '\n';
  for (const auto* key : {"axioms", "theorem_checks"})
    if (rep.contains(key))
      for (const auto& f : rep[key]["failures"]) std::cerr << "FAIL " << f["name"].get<std::string>() << '\n';
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) throw PreconditionViolated("cannot write " + json_out);
    out << render_report(rep, secs);
  }
  return st.pass() ? kPass : kFailure;
}

int cmd_core(const std::string& file, int k) {
  YDHopfAlgebra a = read_ydh_file(file);
  if (!a.has_antipode()) a = a.with_antipode(solve_antipode(a));
  Analysis an = primitive_idempotents(a);
  if (k < 0 || k >= an.dim()) {
    std::cerr << "idempotent " << k << " outside [0, " << an.dim() << ")\n";
    return kUsage;
  }
  CoreRecord c = core(an, k);
  json out = {{"e", c.e},
              {"e_prime", c.e_prime},
              {"m", c.m},
              {"omegas", c.omegas},
              {"omega_rows", json::array()},
              {"freeness_rank", c.freeness_rank},
              {"subalgebra_verified", c.subalgebra_verified},
              {"report", report_json(c.report)}};
  for (int w : c.omegas) out["omega_rows"].push_back(vec_json(an.records[w].eta));
  std::cout << out.dump(2) << '\n';
  return c.report.pass() ? kPass : kFailure;
}

int cmd_dualize(const std::string& file, const std::string& out) {
  YDHopfAlgebra a = read_ydh_file(file);
  if (!a.has_antipode()) a = a.with_antipode(solve_antipode(a));
  write_ydh_file(out, dualize(a));
  return kPass;
}

CoefficientBudget parse_budget(const std::string& s) {
  CoefficientBudget b;
  const size_t colon = s.find(':');
  try {
    b.max_denominator = std::stoi(s.substr(0, colon));
    if (colon != std::string::npos) b.root_order = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--budget", "expected DEN or DEN:ROOTS");
  }
  if (b.max_denominator < 1 || b.root_order < 1) throw CLI::ValidationError("--budget", "values must be positive");
  return b;
}

std::string slug(const FinAbGroup& g) {
  std::string s = "z";
  for (size_t i = 0; i < g.factors().size(); ++i) s += (i ? "x" : "") + std::to_string(g.factors()[i]);
  return g.factors().empty() ? "trivial" : s;
}

int cmd_search(const std::string& group, int dim, const std::string& budget, const std::string& out_dir, int order,
               long node_limit, bool no_prune, bool all) {
  SearchConfig cfg;
  cfg.group = FinAbGroup::parse(group);
  cfg.dim = dim;
  cfg.order = order;
  cfg.budget = parse_budget(budget);
  cfg.node_limit = node_limit;
  cfg.prune = !no_prune;
  SearchResult res = search_nontrivial(cfg);
  int nontrivial = 0;
  std::filesystem::create_directories(out_dir);
  int written = 0;
  for (const SearchHit& h : res.hits) {
    nontrivial += h.trivial ? 0 : 1;
    if (h.trivial && !all) continue;
    const std::string base = out_dir + "/search_" + slug(cfg.group) + "_d" + std::to_string(dim) + "_" +
                             (h.trivial ? "trivial_" : "nontrivial_") + std::to_string(written++);
    write_ydh_file(base + ".ydh", h.algebra);
    std::ofstream rep(base + ".report.json", std::ios::binary);
    rep << analysis_report(h.algebra).dump(2) << '\n';
    std::cout << "wrote " << base << ".ydh\n";
  }
  std::cout << "ansatz " << res.ansatz.size() << ", pruned " << res.pruned.size() << ", hits " << res.hits.size()
            << ", nontrivial " << nontrivial << ", bialgebras without antipode " << res.bialgebras_without_antipode
            << ", nodes " << res.nodes << ", budget branching " << (res.budget_branching ? "yes" : "no") << '\n';
  if (res.truncated) std::cerr << "BudgetExhausted: node limit reached; the results above are partial\n";
  return kPass;
}

int cmd_report(const std::vector<std::string>& files, bool tensor_ideals, const std::string& json_out) {
  const auto t0 = std::chrono::steady_clock::now();
  ReportOptions opts;
  opts.tensor_ideals = tensor_ideals;
  json all = json::array();
  bool pass = true;
  for (const auto& f : files) {
    json rep = analysis_report(read_ydh_file(f), opts);
    const ReportStatus st = report_status(rep);
    pass = pass && st.pass();
    std::cout << f << '\t' << rep["instance"]["dim"].get<int>() << '\t' << rep["instance"]["group"].get<std::string>()
              << '\t'
              << (rep.contains("triviality") ? (rep["triviality"]["trivial"].get<bool>() ? "trivial" : "nontrivial")
                                             : "invalid")
              << '\t' << (st.pass() ? "pass" : "FAIL") << '\n';
    all.push_back({{"file", f}, {"report", rep}});
  }
  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) throw PreconditionViolated("cannot write " + json_out);
    out << render_report(all, seconds_since(t0));
  }
  return pass ? kPass : kFailure;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Exact verifier and analyzer for Yetter-Drinfel'd Hopf algebras over abelian group rings"};
  app.require_subcommand(1);
  std::string file, out, json_out, group, budget = "4:4", out_dir = ".";
  std::vector<std::string> files;
  bool tensor_ideals = false, no_prune = false, all = false;
  int idem = 0, dim = 0, order = 0;
  long node_limit = 2000000;

  auto* verify = app.add_subcommand("verify", "check every axiom");
  verify->add_option("file", file, "YDH file")->required();
  auto* analyze = app.add_subcommand("analyze", "integrals and the full commutative analysis");
  analyze->add_option("file", file, "YDH file")->required();
  analyze->add_flag("--tensor-ideals", tensor_ideals, "include the ideal checks on the twisted tensor square");
  analyze->add_option("--json", json_out, "write the JSON report here");
  auto* core_cmd = app.add_subcommand("core", "core of one primitive idempotent");
  core_cmd->add_option("file", file, "YDH file")->required();
  core_cmd->add_option("--idempotent", idem, "idempotent index")->required();
  auto* dual_cmd = app.add_subcommand("dualize", "write the dual instance");
  dual_cmd->add_option("file", file, "YDH file")->required();
  dual_cmd->add_option("-o", out, "output file")->required();
  auto* search = app.add_subcommand("search", "search for nontrivial commutative semisimple instances");
  search->add_option("--group", group, "group such as Z/2 or Z/2 x Z/2")->required();
  search->add_option("--dim", dim, "dimension")->required();
  search->add_option("--budget", budget, "DEN:ROOTS, largest denominator and root order of coefficients");
  search->add_option("--out", out_dir, "directory for fixture files");
  search->add_option("--order", order, "cyclotomic order of the field (default from budget and group)");
  search->add_option("--node-limit", node_limit, "search nodes per ansatz before truncation");
  search->add_flag("--no-prune", no_prune, "disable the structural prunes");
  search->add_flag("--all", all, "also write trivial hits");
  auto* report = app.add_subcommand("report", "one summary line per file");
  report->add_option("files", files, "YDH files")->required();
  report->add_flag("--tensor-ideals", tensor_ideals, "include the ideal checks on the twisted tensor square");
  report->add_option("--json", json_out, "write all reports here");

  try {
    app.parse(argc, argv);
    threads_from_env();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(file);
    if (*analyze) return cmd_analyze(file, tensor_ideals, json_out);
    if (*core_cmd) return cmd_core(file, idem);
    if (*dual_cmd) return cmd_dualize(file, out);
    if (*search) return cmd_search(group, dim, budget, out_dir, order, node_limit, no_prune, all);
    if (*report) return cmd_report(files, tensor_ideals, json_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const NonSplitField& e) {
    std::cerr << e.what() << '\n';
    return kNonSplit;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const DimensionMismatch& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const NonDivisibleOrders& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionViolated& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace ydh
