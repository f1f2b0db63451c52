// Command-line front end.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "quandlekit/golden.hpp"
#include "quandlekit/io.hpp"
#include "quandlekit/named.hpp"

using namespace quandlekit;

namespace {

constexpr const char *kVersion = "0.1.0";

enum Exit { ok = 0, failed = 1, bad_params = 2, parse_error = 3, axiom_error = 4, capacity = 5 };

int exit_code(ErrorCode code)
{
  switch (code) {
  case ErrorCode::malformed_input:
  case ErrorCode::ragged_rows:
  case ErrorCode::out_of_range_entry:
  case ErrorCode::empty_quandle: return parse_error;
  case ErrorCode::axiom_violation: return axiom_error;
  case ErrorCode::capacity: return capacity;
  default: return bad_params;
  }
}

struct Globals {
  bool json = false;
  bool one_based = false;
};

Globals g;

int shown(int e) { return g.one_based ? e + 1 : e; }

std::string list_string(const std::vector<int> &v, bool elements = true)
{
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? ", " : "") + std::to_string(elements ? shown(v[i]) : v[i]);
  return out + "}";
}

/// "named:<name>" or a path to a quandle JSON file.
Quandle load_quandle(const std::string &arg)
{
  if (arg.rfind("named:", 0) == 0) {
    auto q = named_quandle(arg.substr(6));
    if (!q)
      throw Error(ErrorCode::precondition, "unknown named quandle '" + arg.substr(6) + "'");
    return *q;
  }
  return quandle_from_json(read_json_file(arg));
}

GroupTable parse_group(const std::string &spec)
{
  std::vector<GroupTable> factors;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'S'))
      throw Error(ErrorCode::precondition, "group factors are Z<n> or S<k>, joined by 'x'");
    std::size_t k = 0;
    try {
      k = std::stoul(part.substr(1));
    } catch (const std::exception &) {
      throw Error(ErrorCode::precondition, "bad group factor '" + part + "'");
    }
    if (k == 0 || (part[0] == 'S' && k > 5))
      throw Error(ErrorCode::precondition, "group factor '" + part + "' out of range");
    factors.push_back(part[0] == 'Z' ? cyclic_group(k) : symmetric_group(k));
  }
  if (factors.empty())
    throw Error(ErrorCode::precondition, "empty group specification");
  GroupTable out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = direct_product(out, factors[i]);
  return out;
}

std::size_t parse_size(const std::string &s, const char *what)
{
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 1 || v > 100000)
      throw std::invalid_argument(what);
    return static_cast<std::size_t>(v);
  } catch (const std::exception &) {
    throw Error(ErrorCode::precondition, std::string("bad ") + what + " '" + s + "'");
  }
}

class Report {
public:
  Report(std::string command, Json inputs)
  : start_(std::chrono::steady_clock::now())
  {
    doc_["command"] = std::move(command);
    doc_["inputs"] = std::move(inputs);
    doc_["outputs"] = Json::object();
  }

  Json &outputs() { return doc_["outputs"]; }
  void extra(const std::string &key, Json value) { extra_[key] = std::move(value); }

  void emit()
  {
    if (!g.json)
      return;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    doc_["timing"] = {{"seconds", secs}};
    doc_["version"] = kVersion;
    doc_["seed"] = nullptr;
    for (auto &[k, v] : extra_.items())
      doc_[k] = v;
    std::cout << doc_.dump(2) << '\n';
  }

private:
  std::chrono::steady_clock::time_point start_;
  Json doc_;
  Json extra_ = Json::object();
};

void say(const std::string &line)
{
  if (!g.json)
    std::cout << line << '\n';
}

// ---- make ------------------------------------------------------------------

int cmd_make(const std::string &family, const std::vector<std::string> &params,
             const std::string &out_path)
{
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw Error(ErrorCode::precondition, "'" + family + "' takes " + std::to_string(k) +
                                             " parameter(s)");
  };
  Quandle q = trivial_quandle(1);
  if (family == "trivial") {
    need(1);
    q = trivial_quandle(parse_size(params[0], "order"));
  } else if (family == "dihedral") {
    need(1);
    q = dihedral_quandle(parse_size(params[0], "order"));
  } else if (family == "alexander") {
    need(2);
    long t = 0;
    try {
      t = std::stol(params[1]);
    } catch (const std::exception &) {
      throw Error(ErrorCode::precondition, "bad Alexander parameter '" + params[1] + "'");
    }
    q = alexander_quandle(parse_size(params[0], "order"), t);
  } else if (family == "conj") {
    need(1);
    q = conjugation_quandle(parse_group(params[0]));
  } else if (family == "core") {
    need(1);
    q = core_quandle(parse_group(params[0]));
  } else if (family == "union") {
    need(2);
    q = disjoint_union(load_quandle(params[0]), load_quandle(params[1]));
  } else if (family == "table") {
    need(1);
    auto text = params[0];
    q = quandle_from_json(!text.empty() && (text[0] == '{' || text[0] == '[')
                            ? parse_json_text(text[0] == '[' ? "{\"table\":" + text + "}" : text)
                            : read_json_file(text));
  } else if (family == "named") {
    need(1);
    q = load_quandle("named:" + params[0]);
  } else {
    throw Error(ErrorCode::precondition, "unknown family '" + family + "'");
  }

  Json file = quandle_to_json(q);
  if (!out_path.empty())
    write_text_file(out_path, file.dump() + "\n");
  Report r("make", {{"family", family}, {"params", params}});
  r.outputs() = file;
  if (g.json)
    r.emit();
  else if (out_path.empty())
    std::cout << file.dump() << '\n';
  else
    std::cout << "wrote " << out_path << " (order " << q.size() << ")\n";
  return ok;
}

// ---- check -----------------------------------------------------------------

Json summary(const Quandle &q)
{
  auto qp = quandle_polynomial(q);
  auto orbs = orbits(q);
  Json out;
  out["n"] = q.size();
  out["orbits"] = orbs;
  out["partition_type"] = partition_type(q);
  out["connected"] = orbs.size() == 1;
  out["trivial"] = is_trivial(q);
  out["latin"] = is_latin(q);
  out["right2t"] = is_right_orbit_2transitive(q);
  out["left2t"] = is_left_orbit_2transitive(q);
  out["right2t_global"] = is_right_2transitive(q);
  out["left2t_global"] = is_left_2transitive(q);
  out["right_cyclic"] = is_right_cyclic_type(q);
  out["left_cyclic"] = is_left_cyclic_type(q);
  out["qp"] = to_json(qp);
  out["qp_string"] = qp.to_string();
  return out;
}

const char *axiom_name(Axiom a)
{
  switch (a) {
  case Axiom::idempotence: return "idempotence";
  case Axiom::right_invertibility: return "right_invertibility";
  case Axiom::self_distributivity: return "self_distributivity";
  }
  return "?";
}

int cmd_check(const std::string &path)
{
  Table table = path.rfind("named:", 0) == 0 ? load_quandle(path).table()
                                            : table_from_json(read_json_file(path));
  auto validation = validate_table(table.size(), table);
  Report r("check", {{"file", path}});
  if (!validation.ok) {
    Json witnesses = Json::array();
    for (const auto &v : validation.violations) {
      Json w = {{"axiom", axiom_name(v.axiom)}, {"number", static_cast<int>(v.axiom)}};
      Json elems = Json::array();
      for (int e : {v.i, v.j, v.k})
        if (e >= 0)
          elems.push_back(shown(e));
      w["elements"] = elems;
      witnesses.push_back(w);
    }
    r.outputs() = {{"valid", false}, {"violations", witnesses}};
    r.emit();
    if (!g.json) {
      std::cout << "not a quandle\n";
      for (const auto &w : witnesses)
         std::cout << "  " << w["axiom"].get<std::string>() << " fails at " << w["elements"].dump() << '\n';
    }
    return axiom_error;
  }
  auto q = Quandle::from_table(table);
  auto s = summary(q);
  r.outputs() = {{"valid", true}};
  for (auto &[k, v] : s.items())
    r.outputs()[k] = v;
  r.emit();
  if (!g.json) {
    std::cout << "quandle of order " << q.size() << '\n';
    std::cout << "orbits:";
    for (const auto &o : orbits(q))
      std::cout << ' ' << list_string(o);
    std::cout << '\n';
    std::cout << "partition type: " << list_string(partition_type(q), false) << '\n';
    auto flag = [&](const char *label, const char *key) {
      std::cout << label << ": " << (s[key].get<bool>() ? "yes" : "no") << '\n';
    };
    flag("connected", "connected");
    flag("trivial", "trivial");
    flag("latin", "latin");
    flag("right 2-transitive (per orbit)", "right2t");
    flag("left 2-transitive (per orbit)", "left2t");
    flag("Inn(X) 2-transitive on X", "right2t_global");
    flag("H_X 2-transitive on X", "left2t_global");
    flag("right cyclic type", "right_cyclic");
    flag("left cyclic type", "left_cyclic");
    std::cout << "qp: " << s["qp_string"].get<std::string>() << '\n';
  }
  return ok;
}

// ---- enumerate -------------------------------------------------------------

int cmd_enumerate(std::size_t n, std::string catalog_path, std::size_t max_n, unsigned threads)
{
  if (catalog_path.empty())
    if (const char *env = std::getenv("QUANDLEKIT_CATALOG"))
      catalog_path = env;
  if (n > max_n)
    throw CapacityError("order " + std::to_string(n) + " above --max-n " + std::to_string(max_n));

  std::vector<Catalog::Entry> entries;
  Json cache_info = nullptr;
  if (!catalog_path.empty()) {
    Catalog catalog(catalog_path);
    bool cached = catalog.complete(n);
    std::size_t added = 0;
    if (!cached) {
      added = catalog.add(enumerate_quandles(n, {max_n, threads}));
      catalog.mark_complete(n);
    }
    entries = catalog.entries(n);
    cache_info = {{"path", catalog_path}, {"reused", cached}, {"added", added}};
  } else {
    for (const auto &q : enumerate_quandles(n, {max_n, threads}))
      entries.push_back(Catalog::describe(q));
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto &a, const auto &b) { return a.quandle.table() < b.quandle.table(); });

  std::size_t right = 0, left = 0, right_g = 0, left_g = 0;
  Json list = Json::array();
  for (const auto &e : entries) {
    right += e.right2t;
    left += e.left2t;
    right_g += e.right2t_global;
    left_g += e.left2t_global;
    list.push_back(Catalog::to_json(e));
  }
  Report r("enumerate", {{"n", n}, {"max_n", max_n}});
  r.outputs() = {{"quandles", entries.size()},
                 {"right2t", right},
                 {"left2t", left},
                 {"right2t_global", right_g},
                 {"left2t_global", left_g},
                 {"entries", list}};
  if (!cache_info.is_null())
    r.extra("catalog", cache_info);
  r.emit();
  say("order " + std::to_string(n) + ": " + std::to_string(entries.size()) + " quandles, " +
      std::to_string(right) + " right 2-transitive, " + std::to_string(left) +
      " left 2-transitive (per orbit); " + std::to_string(right_g) + " / " +
      std::to_string(left_g) + " on the whole set");
  if (!cache_info.is_null())
    say(std::string("catalog ") + catalog_path + (cache_info["reused"].get<bool>() ? " (reused)" : ""));
  return ok;
}

// ---- power-assoc -----------------------------------------------------------

template<CoefficientDomain D>
Json power_assoc_json(const Quandle &q, const D &d, const PowerAssocOptions &opts)
{
  auto res = power_assoc_witness(q, d, opts);
  Json out = {{"domain", domain_tag(AnyDomain(d))}, {"guaranteed", res.guaranteed}};
  if (!res.witness) {
    out["witness"] = nullptr;
    return out;
  }
  const auto &w = *res.witness;
  out["witness"] = {{"x", shown(w.x)},
                    {"y", shown(w.y)},
                    {"a", scalar_to_json(d, w.a)},
                    {"b", scalar_to_json(d, w.b)},
                    {"identity", w.identity == 1 ? "(uu)u = u(uu)" : "(uu)(uu) = ((uu)u)u"},
                    {"element", element_to_json(d, w.element)},
                    {"lhs", element_to_json(d, w.lhs)},
                    {"rhs", element_to_json(d, w.rhs)}};
  return out;
}

std::string scalar_text(const Json &c)
{
  if (!c.is_string())
    return c.dump();
  auto s = c.get<std::string>();
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0)
    s.resize(s.size() - 2);
  return s;
}

std::string coeffs_text(const Json &element)
{
  std::string out;
  for (const auto &c : element["coeffs"])
    out += (out.empty() ? "" : " ") + scalar_text(c);
  return "(" + out + ")";
}

int cmd_power_assoc(const std::string &file, const std::string &domain, int radius, bool exhaustive)
{
  auto q = load_quandle(file);
  Report r("power-assoc", {{"file", file}, {"domain", domain}, {"radius", radius}, {"exhaustive", exhaustive}});
  if (radius < 1)
    throw Error(ErrorCode::precondition, "--box radius must be at least 1");
  if (is_trivial(q)) {
    r.outputs() = {{"result", "power associative (trivial)"}};
    r.emit();
    say("power associative (trivial)");
    return ok;
  }
  PowerAssocOptions opts{radius, exhaustive};
  Json res = std::visit([&](const auto &d) { return power_assoc_json(q, d, opts); }, parse_domain(domain));
  res["result"] = res["witness"].is_null() ? "no witness in the search box" : "not power associative";
  r.outputs() = res;
  r.emit();
  if (!g.json) {
    std::cout << res["result"].get<std::string>() << '\n';
    if (!res["witness"].is_null()) {
      const auto &w = res["witness"];
      std::cout << "  u = " << scalar_text(w["a"]) << "*x" << w["x"] << " + " << scalar_text(w["b"]) << "*x"
                << w["y"] << '\n';
      std::cout << "  identity " << w["identity"].get<std::string>() << " fails\n";
      std::cout << "  lhs " << coeffs_text(w["lhs"]) << '\n';
      std::cout << "  rhs " << coeffs_text(w["rhs"]) << '\n';
    }
  }
  return ok;
}

// ---- delta -----------------------------------------------------------------

int cmd_delta(const std::string &file, std::size_t dihedral_n, std::size_t kmax,
              const std::string &variant)
{
  if (file.empty() == (dihedral_n == 0))
    throw Error(ErrorCode::precondition, "give either a quandle file or --dihedral n");
  if (kmax < 1)
    throw Error(ErrorCode::precondition, "--kmax must be at least 1");
  Quandle q = dihedral_n ? dihedral_quandle(dihedral_n) : load_quandle(file);
  std::vector<DeltaVariant> variants;
  if (variant == "both")
    variants = {DeltaVariant::all_bracketings, DeltaVariant::left_normed};
  else
    variants = {parse_variant(variant)};

  Json list = Json::array();
  for (auto v : variants) {
    auto powers = delta_series(q, Integers{}, kmax + 1, v);
    for (std::size_t k = 1; k <= kmax; ++k) {
      auto shape = quotient_shape(powers[k - 1], powers[k]);
      Json entry = {{"n", q.size()}, {"k", k}, {"shape", to_json(shape)}, {"variant", variant_name(v)}};
      entry["exploratory"] = dihedral_n != 0 && dihedral_n % 2 == 0 && k >= 2;
      list.push_back(entry);
      if (!g.json)
        std::cout << variant_name(v) << "  k=" << k << "  " << shape.to_string()
                  << (entry["exploratory"].get<bool>() ? "  (exploratory)" : "") << '\n';
    }
  }
  Json inputs = {{"kmax", kmax}, {"variant", variant}};
  if (dihedral_n)
    inputs["dihedral"] = dihedral_n;
  else
    inputs["file"] = file;
  Report r("delta", inputs);
  r.outputs() = {{"series", list}};
  r.emit();
  return ok;
}

// ---- iso -------------------------------------------------------------------

Matrix<long long> named_matrix(const std::string &name)
{
  if (name == "cex1")
    return counterexample1_matrix();
  if (name == "cex2")
    return counterexample2_matrix();
  throw Error(ErrorCode::precondition, "unknown named matrix '" + name + "'");
}

template<CoefficientDomain D>
Mat<D> load_matrix(const D &d, const std::string &arg)
{
  if (arg == "cex1" || arg == "cex2")
    return convert_matrix(d, named_matrix(arg));
  return matrix_from_json(d, read_json_file(arg));
}

int cmd_iso(const std::string &fx, const std::string &fy, const std::string &domain,
            std::uint64_t budget, const std::string &matrix, unsigned threads)
{
  auto x = load_quandle(fx), y = load_quandle(fy);
  Report r("iso", {{"x", fx}, {"y", fy}, {"ring_domain", domain}, {"budget", budget},
                   {"matrix", matrix.empty() ? Json(nullptr) : Json(matrix)}});
  Json quandle_part;
  std::optional<Permutation> sigma;
  if (x.size() == y.size())
    sigma = quandles_isomorphic(x, y);
  if (sigma) {
    std::vector<int> imgs;
    for (int e : sigma->images())
      imgs.push_back(shown(e));
    quandle_part = {{"isomorphic", true}, {"map", imgs}};
  } else {
    quandle_part = {{"isomorphic", false}};
  }

  AnyDomain dom = parse_domain(domain);
  Json ring_part;
  int code = ok;
  std::visit(
    [&](const auto &d) {
      using D = std::decay_t<decltype(d)>;
      if constexpr (!D::exact) {
        throw Error(ErrorCode::precondition, "ring isomorphisms need an exact domain");
      } else {
        auto rx = quandle_ring(x, d), ry = quandle_ring(y, d);
        auto verify = [&](const Mat<D> &m, const char *method) {
          bool iso = m.rows() == y.size() && m.cols() == x.size() && is_ring_isomorphism(rx, ry, m);
          ring_part = {{"method", method}, {"isomorphism", iso}, {"matrix", matrix_to_json(d, m)}};
          return iso;
        };
        if (!matrix.empty()) {
          if (!verify(load_matrix(d, matrix), "given matrix"))
            code = failed;
        } else if (sigma) {
          Mat<D> m(x.size(), x.size(), d.zero());
          for (std::size_t i = 0; i < x.size(); ++i)
            m(static_cast<std::size_t>((*sigma)(static_cast<int>(i))), i) = d.one();
          verify(m, "quandle isomorphism");
        } else if constexpr (std::is_same_v<D, PrimeField>) {
          if (x.size() != y.size()) {
            ring_part = {{"method", "dimension"}, {"isomorphism", false}};
            return;
          }
          auto found = ring_iso_brute_force(rx, ry, {budget, true, threads});
          if (found)
            verify(*found, "exhaustive search");
          else
            ring_part = {{"method", "exhaustive search"}, {"isomorphism", false}};
        } else {
          ring_part = {{"method", "none"},
                       {"isomorphism", nullptr},
                       {"note", "exhaustive search runs over prime fields only"}};
        }
      }
    },
    dom);
  r.outputs() = {{"quandle", quandle_part}, {"ring", ring_part}};
  r.emit();
  if (!g.json) {
    std::cout << "quandles: " << (sigma ? "isomorphic " + quandle_part["map"].dump() : "not isomorphic")
              << '\n';
    std::cout << "rings over " << domain_label(dom) << " (" << ring_part["method"].get<std::string>()
              << "): ";
    if (ring_part["isomorphism"].is_null())
      std::cout << "undecided\n";
    else
      std::cout << (ring_part["isomorphism"].get<bool>() ? "isomorphic" : "no isomorphism") << '\n';
    if (ring_part.contains("matrix"))
      for (const auto &row : ring_part["matrix"]["rows"]) {
        std::cout << " ";
        for (const auto &c : row)
          std::cout << ' ' << scalar_text(c);
        std::cout << '\n';
      }
  }
  return code;
}

// ---- decompose -------------------------------------------------------------

int cmd_decompose(const std::string &file, const std::string &domain, std::uint64_t max_spinup,
                  double tol)
{
  auto q = load_quandle(file);
  AnyDomain dom = parse_domain(domain);
  Report r("decompose", {{"file", file}, {"domain", domain}, {"max_spinup", max_spinup}, {"tol", tol}});
  if (std::holds_alternative<ComplexFloat>(dom)) {
    if (!(q == dihedral_quandle(q.size())) || q.size() < 3)
      throw Error(ErrorCode::precondition, "the complex check covers dihedral quandles R_n, n >= 3");
    auto rep = complex_decomposition_check(q.size(), tol);
    r.outputs() = to_json(rep);
    r.emit();
    if (!g.json) {
      for (const auto &s : rep.summands)
        std::cout << s.orbit << "  " << s.kind << "  root " << s.root << "  dim " << s.dim
                  << "  residual " << s.residual << '\n';
      std::cout << "dimension sum " << rep.dim_sum << ", independent " << (rep.independent ? "yes" : "no")
                << ", max residual " << rep.max_residual << " (tol " << tol << "): "
                << (rep.ok() ? "ok" : "FAILED") << '\n';
    }
    return rep.ok() ? ok : failed;
  }
  DecompositionReport rep;
  DecompositionOptions opts{max_spinup};
  if (auto *f = std::get_if<PrimeField>(&dom))
    rep = verify_simple_decomposition(q, *f, opts);
  else if (auto *qq = std::get_if<Rationals>(&dom))
    rep = verify_simple_decomposition(q, *qq, opts);
  else
    throw Error(ErrorCode::precondition, "decomposition needs a field: Q, F<p> or C");
  r.outputs() = to_json(rep);
  r.emit();
  if (!g.json) {
    for (const auto &e : rep.entries) {
      std::cout << "orbit " << list_string(e.orbit) << ": 1 + " << e.dim_st
                << (e.invariant ? ", invariant" : ", NOT invariant") << ", rank " << e.permutation_rank
                << ", simple: " << to_string(e.simple);
      if (e.simple == Verdict::unknown && e.permutation_rank > 2)
        std::cout << " (action has rank " << e.permutation_rank << ", criterion does not apply)";
      std::cout << '\n';
    }
    std::cout << "full rank: " << (rep.full_rank ? "yes" : "no") << ", verdict: " << to_string(rep.verdict)
              << '\n';
  }
  return ok;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string &fault, bool list, unsigned threads)
{
  GoldenOptions opts;
  if (!fault.empty())
    opts.inject_fault = fault;
  opts.threads = threads;
  auto rep = run_golden_suite(opts);
  if (!fault.empty()) {
    bool known = false;
    for (const auto &c : rep.checks)
      known = known || c.name == fault;
    if (!known)
      throw Error(ErrorCode::precondition, "no check named '" + fault + "'");
  }
  Report r("verify", {{"inject_fault", fault.empty() ? Json(nullptr) : Json(fault)}});
  r.outputs() = to_json(rep);
  r.emit();
  if (!g.json) {
    for (const auto &c : rep.checks) {
      if (list || !c.passed || c.exploratory) {
        std::cout << (c.exploratory ? "INFO " : c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed || c.exploratory)
          std::cout << "  expected [" << c.expected << "] got [" << c.actual << "]";
        std::cout << '\n';
      }
    }
    std::cout << rep.checks.size() - rep.failures() << "/" << rep.checks.size() << " checks pass\n";
  }
  return rep.passed() ? ok : failed;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Finite quandles, quandle rings and their ideals"};
  app.set_version_flag("--version", kVersion);
  app.add_flag("--json", g.json, "Print a single JSON report on stdout");
  app.add_flag("--one-based", g.one_based, "Show elements as 1..n in reports");
  app.require_subcommand(1);

  std::string family, out_path;
  auto *make = app.add_subcommand("make", "Build a quandle file");
  make->add_option("family", family,
                   "trivial | dihedral | alexander | conj | core | union | table | named")
    ->required();
  make->allow_extras();
  make->usage("Usage: quandlekit make [OPTIONS] family [params...]");
  make->add_option("-o,--output", out_path, "Write the quandle here instead of stdout");

  std::string file;
  auto *check = app.add_subcommand("check", "Validate a table and summarize its invariants");
  check->add_option("file", file, "Quandle JSON file or named:<name>")->required();

  std::size_t n = 0, max_n = 6;
  std::string catalog;
  unsigned threads = 1;
  auto *enumerate = app.add_subcommand("enumerate", "Enumerate quandles of order n");
  enumerate->add_option("n", n, "Order")->required();
  enumerate->add_option("--catalog", catalog, "JSONL catalog (default $QUANDLEKIT_CATALOG)");
  enumerate->add_option("--max-n", max_n, "Refuse orders above this")->capture_default_str();
  enumerate->add_option("--threads", threads)->capture_default_str();

  std::string domain = "Q";
  int radius = 2;
  bool exhaustive = false;
  auto *pa = app.add_subcommand("power-assoc", "Search for an Albert identity failure");
  pa->add_option("file", file)->required();
  pa->add_option("--domain", domain, "Z, Q, C or F<p>")->capture_default_str();
  pa->add_option("--box", radius, "Coefficient radius")->capture_default_str();
  pa->add_flag("--exhaustive", exhaustive, "All nonzero coefficient pairs over F_p");

  std::size_t dihedral = 0, kmax = 3;
  std::string variant = "both";
  auto *delta = app.add_subcommand("delta", "Quotients of the augmentation-ideal powers over Z");
  delta->add_option("file", file);
  delta->add_option("--dihedral", dihedral, "Use R_n");
  delta->add_option("--kmax", kmax)->capture_default_str();
  delta->add_option("--variant", variant, "all-bracketings | left-normed | both")->capture_default_str();

  std::string fy, matrix, ring_domain = "Q";
  std::uint64_t budget = 100'000'000;
  auto *iso = app.add_subcommand("iso", "Compare two quandles and their rings");
  iso->add_option("x", file)->required();
  iso->add_option("y", fy)->required();
  iso->add_option("--ring-domain", ring_domain, "Z, Q or F<p>")->capture_default_str();
  iso->add_option("--budget", budget, "Candidate columns for the exhaustive search")->capture_default_str();
  iso->add_option("--matrix", matrix, "Matrix file, or cex1 / cex2");
  iso->add_option("--threads", threads)->capture_default_str();

  std::string dec_domain = "Q";
  std::uint64_t max_spinup = 1'000'000;
  double tol = 1e-9;
  auto *dec = app.add_subcommand("decompose", "Check the orbit decomposition into simple right ideals");
  dec->add_option("file", file)->required();
  dec->add_option("--domain", dec_domain, "Q, F<p>, or C for R_n")->capture_default_str();
  dec->add_option("--max-spinup", max_spinup)->capture_default_str();
  dec->add_option("--tol", tol)->capture_default_str();

  std::string fault;
  bool list = false;
  auto *verify = app.add_subcommand("verify", "Run the golden suite");
  verify->add_option("--inject-fault", fault, "Corrupt the expectation of one named check");
  verify->add_flag("--list", list, "Print passing checks too");
  verify->add_option("--threads", threads)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? ok : bad_params;
  }

  try {
    if (*make)
      return cmd_make(family, make->remaining(), out_path);
    if (*check)
      return cmd_check(file);
    if (*enumerate)
      return cmd_enumerate(n, catalog, max_n, threads);
    if (*pa)
      return cmd_power_assoc(file, domain, radius, exhaustive);
    if (*delta)
      return cmd_delta(file, dihedral, kmax, variant);
    if (*iso)
      return cmd_iso(file, fy, ring_domain, budget, matrix, threads);
    if (*dec)
      return cmd_decompose(file, dec_domain, max_spinup, tol);
    if (*verify)
      return cmd_verify(fault, list, threads);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_params;
  }
  return bad_params;
}
