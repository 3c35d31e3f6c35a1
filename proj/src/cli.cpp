#include "liesym/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "liesym/invariant_sets.hpp"
#include "liesym/lie.hpp"
#include "liesym/normalform.hpp"
#include "liesym/parser.hpp"
#include "liesym/symmetry.hpp"
#include "liesym/toral.hpp"

namespace liesym::cli {

using json = nlohmann::ordered_json;

namespace {

// Usage and precondition failures; exit code 2.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string command;
  std::vector<std::string> args;
  std::map<std::string, int> ints;
  std::optional<std::string> at;
  std::optional<std::string> weights;
  bool verify = false;
  const SystemFile* sys = nullptr;

  int opt(const std::string& name) const { return ints.at(name); }
  std::optional<int> maybe(const std::string& name) const {
    auto it = ints.find(name);
    return it == ints.end() ? std::nullopt : std::optional<int>(it->second);
  }
};

struct Report {
  json j;
  bool check = false;
};

Report make_report(const Invocation& inv, bool check) {
  Report r;
  r.check = check;
  r.j["command"] = inv.command;
  r.j["inputs"] = json::object();
  r.j["result"] = json::object();
  r.j["certificates"] = json::object();
  r.j["bounds"] = json::object();
  r.j["valid"] = true;
  if (inv.sys) {
    std::string vars;
    for (const auto& v : inv.sys->vars) vars += (vars.empty() ? "" : " ") + v;
    r.j["inputs"]["vars"] = vars;
  }
  return r;
}

const SystemFile& system_of(const Invocation& inv) {
  if (!inv.sys) throw Failure(inv.command + ": needs a system file (-f FILE)");
  return *inv.sys;
}

const std::vector<std::string>& vars_of(const Invocation& inv) { return system_of(inv).vars; }

std::string kind_of(const SystemFile::Entry& e) {
  if (std::holds_alternative<VectorField>(e.value)) return "field";
  if (std::holds_alternative<Poly>(e.value)) return "poly";
  return "weights";
}

const SystemFile::Entry& entry(const Invocation& inv, const std::string& name) {
  const auto* e = system_of(inv).find(name);
  if (!e) throw Failure(inv.command + ": unknown name '" + name + "'");
  return *e;
}

const VectorField& field_arg(const Invocation& inv, const std::string& name, Report& r) {
  const auto& e = entry(inv, name);
  const auto* f = std::get_if<VectorField>(&e.value);
  if (!f) throw Failure(inv.command + ": '" + name + "' is a " + kind_of(e) + ", expected a field");
  r.j["inputs"][name] = f->to_string(vars_of(inv));
  return *f;
}

const VectorField& square_field_arg(const Invocation& inv, const std::string& name, Report& r) {
  const auto& f = field_arg(inv, name, r);
  if (!f.is_square())
    throw Failure(inv.command + ": field '" + name + "' has " + std::to_string(f.size()) + " components for " +
                  std::to_string(f.nvars()) + " variables");
  return f;
}

const Poly& poly_arg(const Invocation& inv, const std::string& name, Report& r) {
  const auto& e = entry(inv, name);
  const auto* p = std::get_if<Poly>(&e.value);
  if (!p) throw Failure(inv.command + ": '" + name + "' is a " + kind_of(e) + ", expected a poly");
  r.j["inputs"][name] = p->to_string(vars_of(inv));
  return *p;
}

bool looks_like_literal(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789+-/, ") == std::string::npos;
}

DiagonalAction weights_arg(const Invocation& inv, const std::string& text, Report& r) {
  if (inv.sys) {
    if (const auto* w = inv.sys->weights(text)) {
      r.j["inputs"][text] = w->to_string();
      return *w;
    }
  }
  if (!looks_like_literal(text)) throw Failure(inv.command + ": unknown weights '" + text + "'");
  try {
    DiagonalAction w = DiagonalAction::parse(text);
    r.j["inputs"]["weights"] = w.to_string();
    return w;
  } catch (const std::invalid_argument& e) {
    throw Failure(inv.command + ": bad weights '" + text + "': " + e.what());
  }
}

std::vector<std::string> names_for(const Invocation& inv, std::size_t n) {
  if (inv.sys && inv.sys->vars.size() == n) return inv.sys->vars;
  return default_var_names(n);
}

int nonneg(const Invocation& inv, const std::string& name) {
  const int v = inv.opt(name);
  if (v < 0) throw Failure(inv.command + ": --" + name + " must be nonnegative");
  return v;
}

std::vector<Rational> parse_rational_list(const std::string& text, char sep) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(parse_rational(item));
  return out;
}

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i] + 1);
  return s + "}";
}

std::string int_vector_text(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

json minor_list(const std::vector<Minor>& minors, const std::vector<std::string>& names, bool nonzero_only) {
  json arr = json::array();
  for (const auto& m : minors) {
    if (nonzero_only && m.value.is_zero()) continue;
    json e;
    e["rows"] = join_indices(m.rows);
    e["cols"] = join_indices(m.cols);
    e["value"] = m.value.to_string(names);
    arr.push_back(std::move(e));
  }
  return arr;
}

// ---- commands ---------------------------------------------------------

Report cmd_bracket(const Invocation& inv) {
  Report r = make_report(inv, false);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  const auto& g = square_field_arg(inv, inv.args[1], r);
  r.j["result"]["bracket"] = lie_bracket(f, g).to_string(vars_of(inv));
  return r;
}

Report cmd_lieder(const Invocation& inv) {
  Report r = make_report(inv, false);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  const auto& p = poly_arg(inv, inv.args[1], r);
  r.j["result"]["lie_derivative"] = lie_derivative(f, p).to_string(vars_of(inv));
  return r;
}

Report cmd_symcheck(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto& h = square_field_arg(inv, inv.args[0], r);
  const auto& f = square_field_arg(inv, inv.args[1], r);
  const auto check = check_symmetry(h, f);
  r.j["result"]["symmetric"] = check.holds;
  r.j["certificates"]["bracket"] = check.residual.to_string(vars_of(inv));
  r.j["valid"] = check.holds;
  return r;
}

Report cmd_orbsym(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto& h = square_field_arg(inv, inv.args[0], r);
  const auto& f = square_field_arg(inv, inv.args[1], r);
  const auto bound = inv.maybe("cofactor-deg");
  if (bound && *bound < 0) throw Failure("orbsym: --cofactor-deg must be nonnegative");
  const auto& names = vars_of(inv);
  const auto cert = check_orbital_symmetry(h, f, bound);
  r.j["result"]["orbital"] = cert.has_value();
  r.j["result"]["lambda"] = cert ? json(cert->cofactor.to_string(names)) : json(nullptr);
  r.j["certificates"]["bracket"] = lie_bracket(h, f).to_string(names);
  if (cert) r.j["certificates"]["residual"] = cert->residual.to_string(names);
  r.j["bounds"]["cofactor_degree"] = bound ? *bound : default_cofactor_bound(h, f);
  r.j["valid"] = cert.has_value();
  return r;
}

Report cmd_centralizer(const Invocation& inv) {
  Report r = make_report(inv, false);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  const int d = nonneg(inv, "max-deg");
  const auto basis = centralizer_basis(f, d);
  json arr = json::array();
  for (const auto& h : basis.basis) arr.push_back(h.to_string(vars_of(inv)));
  r.j["result"]["dimension"] = basis.basis.size();
  r.j["result"]["basis"] = std::move(arr);
  r.j["bounds"]["max_degree"] = d;
  return r;
}

Report cmd_normalizer(const Invocation& inv) {
  Report r = make_report(inv, false);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  const int d = nonneg(inv, "max-deg");
  const int c = nonneg(inv, "cofactor-deg");
  const auto basis = normalizer_basis(f, d, c);
  json arr = json::array();
  for (const auto& e : basis.basis) {
    json item;
    item["field"] = e.field.to_string(vars_of(inv));
    item["cofactor"] = e.cofactor.to_string(vars_of(inv));
    arr.push_back(std::move(item));
  }
  r.j["result"]["dimension"] = basis.basis.size();
  r.j["result"]["basis"] = std::move(arr);
  r.j["bounds"]["max_degree"] = d;
  r.j["bounds"]["cofactor_degree"] = c;
  return r;
}

Report cmd_linsym(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto& f = square_field_arg(inv, inv.args[1], r);
  const std::size_t n = f.nvars();
  std::vector<Rational> entries;
  std::stringstream ss(inv.args[0]);
  std::string row;
  std::size_t rows = 0;
  try {
    while (std::getline(ss, row, ';')) {
      auto vals = parse_rational_list(row, ',');
      if (vals.size() != n) throw Failure("linsym: matrix row " + std::to_string(rows + 1) + " has " +
                                          std::to_string(vals.size()) + " entries, expected " + std::to_string(n));
      entries.insert(entries.end(), vals.begin(), vals.end());
      ++rows;
    }
  } catch (const std::invalid_argument& e) {
    throw Failure(std::string("linsym: bad matrix entry: ") + e.what());
  }
  if (rows != n) throw Failure("linsym: matrix has " + std::to_string(rows) + " rows, expected " + std::to_string(n));
  RationalMatrix T(n, n, entries);
  std::string canon;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) canon += ";";
    for (std::size_t j = 0; j < n; ++j) canon += (j ? "," : "") + to_string(T(i, j));
  }
  r.j["inputs"]["T"] = canon;
  bool holds = false;
  try {
    holds = check_linear_symmetry(T, f);
  } catch (const std::invalid_argument& e) {
    throw Failure(std::string("linsym: ") + e.what());
  }
  const VectorField Tx = VectorField::linear(n, entries);
  PolyMatrix Tm(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Tm(i, j) = Poly(n, T(i, j));
  const VectorField residual = compose(f, Tx) - Tm.apply(f);
  r.j["result"]["symmetric"] = holds;
  r.j["certificates"]["residual"] = residual.to_string(vars_of(inv));
  r.j["valid"] = holds;
  return r;
}

Poly restrict_to_prefix(const Poly& p, std::size_t n, const std::string& what) {
  Poly out(n);
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::exponent_type> e(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = n; i < m.nvars(); ++i)
      if (m[i] != 0) throw Failure("secord: " + what + " must only involve the first " + std::to_string(n) + " variables");
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Report cmd_secord(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto& vars = vars_of(inv);
  if (vars.size() % 2 != 0) throw Failure("secord: needs 2n variables (x then x')");
  const std::size_t n = vars.size() / 2;
  const auto& G = field_arg(inv, inv.args[0], r);
  const auto& H = field_arg(inv, inv.args[1], r);
  if (G.size() != n || H.size() != n)
    throw Failure("secord: G and H need " + std::to_string(n) + " components");
  std::vector<Poly> gc;
  for (const auto& c : G) gc.push_back(restrict_to_prefix(c, n, "G"));
  const auto check = check_second_order_symmetry(VectorField(std::move(gc)), H);
  r.j["result"]["symmetric"] = check.holds;
  r.j["certificates"]["residual"] = check.residual.to_string(vars);
  r.j["valid"] = check.holds;
  return r;
}

Report cmd_toral_gens(const Invocation& inv) {
  Report r = make_report(inv, false);
  const auto B = weights_arg(inv, inv.args[0], r);
  const int d = nonneg(inv, "max-deg");
  const auto names = names_for(inv, B.size());
  json arr = json::array();
  for (const auto& m : invariant_monomial_generators(B, d)) arr.push_back(m.to_string(names));
  std::string iw;
  for (const auto& z : B.integer_weights()) iw += (iw.empty() ? "" : ",") + z.get_str();
  r.j["result"]["integer_weights"] = iw;
  r.j["result"]["generators"] = std::move(arr);
  r.j["bounds"]["max_degree"] = d;
  r.j["bounds"]["complete_up_to_max_degree"] = true;
  return r;
}

Report cmd_toral_trivial(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto B = weights_arg(inv, inv.args[0], r);
  const bool trivial = invariant_algebra_is_trivial(B);
  r.j["result"]["trivial"] = trivial;
  r.j["valid"] = trivial;
  return r;
}

Monomial monomial_of(const Invocation& inv, const std::string& name, Report& r) {
  const Poly& p = poly_arg(inv, name, r);
  if (p.size() != 1 || p.leading_coeff() != 1)
    throw Failure("relations: '" + name + "' is not a monomial with coefficient 1");
  return p.leading_monomial();
}

Report cmd_relations(const Invocation& inv) {
  Report r = make_report(inv, false);
  std::vector<Monomial> gens;
  std::vector<std::string> names;
  if (inv.weights) {
    if (!inv.args.empty()) throw Failure("relations: give either monomial names or --weights, not both");
    if (!inv.maybe("max-deg")) throw Failure("relations: --weights needs --max-deg");
    const auto B = weights_arg(inv, *inv.weights, r);
    const int d = nonneg(inv, "max-deg");
    gens = invariant_monomial_generators(B, d);
    names = names_for(inv, B.size());
    r.j["bounds"]["max_degree"] = d;
  } else {
    if (inv.args.empty()) throw Failure("relations: needs monomial names or --weights W --max-deg d");
    for (const auto& a : inv.args) gens.push_back(monomial_of(inv, a, r));
    names = vars_of(inv);
  }
  json garr = json::array();
  for (const auto& m : gens) garr.push_back(m.to_string(names));
  const auto ynames = default_var_names(gens.size(), "y");
  json rarr = json::array();
  for (const auto& rel : monomial_relations(gens)) {
    json e;
    e["exponents"] = int_vector_text(rel);
    e["binomial"] = relation_binomial(rel).to_string(ynames);
    rarr.push_back(std::move(e));
  }
  r.j["result"]["generators"] = std::move(garr);
  r.j["result"]["relations"] = std::move(rarr);
  return r;
}

Report cmd_weight_split(const Invocation& inv) {
  Report r = make_report(inv, false);
  const auto B = weights_arg(inv, inv.args[0], r);
  const auto& p = poly_arg(inv, inv.args[1], r);
  if (B.size() != p.nvars()) throw Failure("weight-split: weight count does not match variable count");
  json arr = json::array();
  for (const auto& [chi, part] : weight_decompose(B, p)) {
    json e;
    e["weight"] = to_string(chi);
    e["component"] = part.to_string(vars_of(inv));
    arr.push_back(std::move(e));
  }
  r.j["result"]["components"] = std::move(arr);
  return r;
}

Report cmd_toral_centralizer(const Invocation& inv) {
  Report r = make_report(inv, false);
  const auto B = weights_arg(inv, inv.args[0], r);
  const int d = nonneg(inv, "max-deg");
  const auto names = names_for(inv, B.size());
  json arr = json::array();
  const auto monos = centralizer_monomials(B, d);
  for (const auto& fm : monos) arr.push_back(monomial_field(B.size(), fm).to_string(names));
  r.j["result"]["dimension"] = monos.size();
  r.j["result"]["basis"] = std::move(arr);
  r.j["bounds"]["max_degree"] = d;
  return r;
}

Report cmd_normalform(const Invocation& inv) {
  Report r = make_report(inv, inv.verify);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  const int N = inv.opt("deg");
  if (N < 1) throw Failure("normalform: --deg must be at least 1");
  const auto& names = vars_of(inv);
  NormalFormResult res;
  try {
    res = normal_form(f, N);
  } catch (const std::invalid_argument& e) {
    throw Failure(std::string("normalform: ") + e.what());
  }
  r.j["result"]["linear_part"] = res.linear_part.to_string();
  r.j["result"]["normal_form"] = res.normal_form.to_string(names);
  json gens = json::array();
  for (const auto& h : res.generators) gens.push_back(h.to_string(names));
  r.j["result"]["generators"] = std::move(gens);
  r.j["result"]["transformation"] = res.transformation.to_string(names);
  json reson = json::array();
  for (const auto& fm : res.resonant_monomials) reson.push_back(monomial_field(f.nvars(), fm).to_string(names));
  r.j["result"]["resonant"] = std::move(reson);
  r.j["bounds"]["truncation_degree"] = N;
  if (inv.verify) {
    const auto rep = verify_normal_form(res, f);
    r.j["certificates"]["commutes"] = rep.commutes;
    r.j["certificates"]["generators_consistent"] = rep.generators_consistent;
    r.j["certificates"]["residual_degree"] = rep.residual_degree;
    r.j["certificates"]["conjugacy_residual"] = rep.conjugacy_residual.to_string(names);
    r.j["valid"] = rep.valid;
  }
  return r;
}

Report cmd_resonances(const Invocation& inv) {
  Report r = make_report(inv, false);
  const auto B = weights_arg(inv, inv.args[0], r);
  const int d = nonneg(inv, "deg");
  const auto names = names_for(inv, B.size());
  json arr = json::array();
  for (const auto& fm : resonant_monomials(B, d)) arr.push_back(monomial_field(B.size(), fm).to_string(names));
  r.j["result"]["resonant"] = std::move(arr);
  r.j["bounds"]["degree"] = d;
  return r;
}

Report cmd_firstint(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  const auto& p = poly_arg(inv, inv.args[1], r);
  const auto res = first_integral_check(f, p);
  r.j["result"]["first_integral"] = res.holds;
  r.j["result"]["constant_warning"] = res.constant_warning;
  r.j["certificates"]["lie_derivative"] = res.lie_derivative.to_string(vars_of(inv));
  r.j["valid"] = res.holds;
  return r;
}

void certificate_fields(Report& r, const SemiInvariantCertificate& c, const std::vector<std::string>& names,
                        const std::string& value_key, const std::string& identity) {
  r.j["result"][value_key] = c.psi.to_string(names);
  r.j["result"]["constant_warning"] = c.constant_warning;
  r.j["certificates"]["cofactor"] = c.valid ? json(c.cofactor.to_string(names)) : json(nullptr);
  r.j["certificates"]["identity"] = identity;
  r.j["valid"] = c.valid;
}

Report cmd_semiinv(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  const auto& p = poly_arg(inv, inv.args[1], r);
  if (p.is_zero()) throw Failure("semiinv: psi must be nonzero");
  const auto c = semi_invariant_cofactor(f, p);
  certificate_fields(r, c, vars_of(inv), "psi", "X_f(psi) = mu*psi");
  r.j["certificates"]["lie_derivative"] = lie_derivative(f, p).to_string(vars_of(inv));
  r.j["bounds"]["cofactor_degree"] = c.degree_bound;
  return r;
}

Report cmd_invcheck(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  std::vector<Poly> phis;
  for (std::size_t i = 1; i < inv.args.size(); ++i) phis.push_back(poly_arg(inv, inv.args[i], r));
  const int d = nonneg(inv, "mu-deg");
  const auto res = invariant_variety_check(f, phis, d);
  json rows = json::array();
  for (const auto& row : res.cofactors) {
    json cells = json::array();
    for (const auto& mu : row) cells.push_back(mu.to_string(vars_of(inv)));
    rows.push_back(std::move(cells));
  }
  r.j["result"]["invariant"] = res.invariant;
  r.j["certificates"]["cofactors"] = std::move(rows);
  r.j["bounds"]["mu_degree"] = d;
  r.j["valid"] = res.invariant;
  return r;
}

Report cmd_minors(const Invocation& inv) {
  Report r = make_report(inv, false);
  std::vector<VectorField> cols;
  for (const auto& a : inv.args) cols.push_back(field_arg(inv, a, r));
  const int s = inv.opt("size");
  if (s < 1) throw Failure("minors: --size must be at least 1");
  MinorFamily fam;
  try {
    fam = minors(cols, static_cast<std::size_t>(s));
  } catch (const std::invalid_argument& e) {
    throw Failure(std::string("minors: ") + e.what());
  }
  r.j["result"]["matrix"] = std::to_string(fam.rows) + "x" + std::to_string(fam.cols);
  r.j["result"]["minors"] = minor_list(fam.minors, vars_of(inv), false);
  r.j["bounds"]["size"] = s;
  return r;
}

Report cmd_intfactor(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  const auto& h = square_field_arg(inv, inv.args[1], r);
  if (f.nvars() != 2) throw Failure("intfactor: needs a planar system (2 variables)");
  SemiInvariantCertificate c;
  try {
    c = integrating_factor(f, h);
  } catch (const std::invalid_argument& e) {
    throw Failure(std::string("intfactor: ") + e.what());
  }
  certificate_fields(r, c, vars_of(inv), "phi", "X_f(phi) = div(f)*phi");
  r.j["result"]["integrating_factor"] = "1/(" + c.psi.to_string(vars_of(inv)) + ")";
  return r;
}

Report cmd_jacobimult(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  std::vector<VectorField> hs;
  for (std::size_t i = 1; i < inv.args.size(); ++i) hs.push_back(square_field_arg(inv, inv.args[i], r));
  if (hs.size() + 1 != f.nvars())
    throw Failure("jacobimult: needs " + std::to_string(f.nvars() - 1) + " symmetry fields");
  SemiInvariantCertificate c;
  try {
    c = jacobi_multiplier(f, hs);
  } catch (const std::invalid_argument& e) {
    throw Failure(std::string("jacobimult: ") + e.what());
  }
  certificate_fields(r, c, vars_of(inv), "phi", "X_f(phi) = div(f)*phi");
  r.j["result"]["jacobi_multiplier"] = "1/(" + c.psi.to_string(vars_of(inv)) + ")";
  return r;
}

Report cmd_rankstrata(const Invocation& inv) {
  Report r = make_report(inv, false);
  const auto& Phi = field_arg(inv, inv.args[0], r);
  const int s = nonneg(inv, "s");
  const auto fam = jacobian_rank_minors(Phi, static_cast<std::size_t>(s));
  bool all_zero = true;
  for (const auto& m : fam.minors) all_zero = all_zero && m.value.is_zero();
  r.j["result"]["minor_size"] = s + 1;
  r.j["result"]["minor_count"] = fam.minors.size();
  r.j["result"]["all_vanish"] = all_zero;
  r.j["result"]["nonzero_minors"] = minor_list(fam.minors, vars_of(inv), true);
  if (inv.at) {
    std::vector<Rational> pt;
    try {
      pt = parse_rational_list(*inv.at, ',');
    } catch (const std::invalid_argument& e) {
      throw Failure(std::string("rankstrata: bad point: ") + e.what());
    }
    if (pt.size() != Phi.nvars()) throw Failure("rankstrata: point has the wrong dimension");
    std::string canon;
    for (const auto& q : pt) canon += (canon.empty() ? "" : ",") + to_string(q);
    r.j["inputs"]["at"] = canon;
    r.j["result"]["rank_at_point"] = jacobian_rank_at(Phi, pt);
  }
  r.j["bounds"]["s"] = s;
  return r;
}

Report cmd_reduce(const Invocation& inv) {
  Report r = make_report(inv, true);
  const auto& f = square_field_arg(inv, inv.args[0], r);
  std::vector<Poly> phis;
  for (std::size_t i = 1; i < inv.args.size(); ++i) {
    const auto& e = entry(inv, inv.args[i]);
    if (const auto* field = std::get_if<VectorField>(&e.value)) {
      r.j["inputs"][e.name] = field->to_string(vars_of(inv));
      phis.insert(phis.end(), field->begin(), field->end());
    } else {
      phis.push_back(poly_arg(inv, inv.args[i], r));
    }
  }
  const int d = nonneg(inv, "target-deg");
  const auto g = reduce_by_invariants(f, phis, d);
  const auto wnames = default_var_names(phis.size(), "w");
  r.j["result"]["reduced"] = g ? json(g->to_string(wnames)) : json(nullptr);
  if (g) {
    const auto check = check_solution_preserving(VectorField(phis), f, *g);
    r.j["certificates"]["solution_preserving"] = check.holds;
    r.j["certificates"]["residual"] = check.residual.to_string(vars_of(inv));
    r.j["valid"] = check.holds;
  } else {
    r.j["valid"] = false;
  }
  r.j["bounds"]["target_degree"] = d;
  return r;
}

// ---- dispatch ---------------------------------------------------------

struct IntOption {
  std::string name;
  bool required;
  std::string help;
};

struct Command {
  std::string name;
  std::string help;
  std::string usage;
  std::size_t min_args;
  std::size_t max_args;  // 0 = unlimited
  std::vector<IntOption> ints;
  std::function<Report(const Invocation&)> run;
  bool takes_at = false;
  bool takes_weights = false;
  bool takes_verify = false;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"bracket", "Lie bracket [F, G] = DG F - DF G", "F G", 2, 2, {}, cmd_bracket},
      {"lieder", "Lie derivative X_F(P)", "F P", 2, 2, {}, cmd_lieder},
      {"symcheck", "check [H, F] = 0", "H F", 2, 2, {}, cmd_symcheck},
      {"orbsym", "find lambda with [H, F] = lambda F", "H F", 2, 2,
       {{"cofactor-deg", false, "degree bound for lambda"}}, cmd_orbsym},
      {"centralizer", "basis of {h : [h, F] = 0}", "F", 1, 1, {{"max-deg", true, "degree bound for h"}},
       cmd_centralizer},
      {"normalizer", "basis of {(h, lambda) : [h, F] = lambda F}", "F", 1, 1,
       {{"max-deg", true, "degree bound for h"}, {"cofactor-deg", true, "degree bound for lambda"}}, cmd_normalizer},
      {"linsym", "check F(Tx) = T F(x); T as 'a,b;c,d'", "T F", 2, 2, {}, cmd_linsym},
      {"secord", "point symmetry G of x'' = H(x, x')", "G H", 2, 2, {}, cmd_secord},
      {"toral-gens", "invariant monomial generators of a diagonal action", "W", 1, 1,
       {{"max-deg", true, "degree bound"}}, cmd_toral_gens},
      {"toral-trivial", "check that only constants are invariant", "W", 1, 1, {}, cmd_toral_trivial},
      {"relations", "integer relations among monomials", "[P...]", 0, 0, {{"max-deg", false, "degree bound with --weights"}},
       cmd_relations, false, true},
      {"weight-split", "split P into weight components", "W P", 2, 2, {}, cmd_weight_split},
      {"toral-centralizer", "monomial fields commuting with the action", "W", 1, 1,
       {{"max-deg", true, "degree bound"}}, cmd_toral_centralizer},
      {"normalform", "truncated normal form", "F", 1, 1, {{"deg", true, "truncation degree N"}}, cmd_normalform,
       false, false, true},
      {"resonances", "resonant monomial fields of one degree", "W", 1, 1, {{"deg", true, "degree"}},
       cmd_resonances},
      {"firstint", "check X_F(P) = 0", "F P", 2, 2, {}, cmd_firstint},
      {"semiinv", "find mu with X_F(P) = mu P", "F P", 2, 2, {}, cmd_semiinv},
      {"invcheck", "check invariance of {P1 = ... = 0}", "F P1 P2...", 2, 0,
       {{"mu-deg", true, "degree bound for the cofactors"}}, cmd_invcheck},
      {"minors", "minors of (F | H1 | ...)", "F H1...", 1, 0, {{"size", true, "minor size"}}, cmd_minors},
      {"intfactor", "integrating factor 1/det(F, H) for planar F", "F H", 2, 2, {}, cmd_intfactor},
      {"jacobimult", "Jacobi multiplier 1/det(F, H1, ...)", "F H1...", 2, 0, {}, cmd_jacobimult},
      {"rankstrata", "(s+1)-minors of DPHI and optional rank at a point", "PHI", 1, 1,
       {{"s", true, "rank threshold s"}}, cmd_rankstrata, true},
      {"reduce", "find g with X_F(phi) = g(phi)", "F PHI1...", 2, 0, {{"target-deg", true, "degree bound for g"}},
       cmd_reduce},
  };
  return table;
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

void render(std::string& out, const std::string& key, const json& v, int indent);

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render_items(std::string& out, const json& arr, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& e : arr) {
    if (e.is_object()) {
      out += pad + "-\n";
      for (const auto& [k, v] : e.items()) render(out, k, v, indent + 2);
    } else if (e.is_array()) {
      out += pad + "-\n";
      render_items(out, e, indent + 2);
    } else {
      out += pad + "- " + scalar_text(e) + "\n";
    }
  }
}

void render(std::string& out, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += pad + key + ": none\n";
      return;
    }
    out += pad + key + ":\n";
    for (const auto& [k, child] : v.items()) render(out, k, child, indent + 2);
  } else if (v.is_array()) {
    if (v.empty()) {
      out += pad + key + ": []\n";
      return;
    }
    out += pad + key + ":\n";
    render_items(out, v, indent + 2);
  } else {
    out += pad + key + ": " + scalar_text(v) + "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::string out;
  for (const auto& [k, v] : report.items()) render(out, k, v, 0);
  return out;
}

std::vector<std::string> command_names() {
  std::vector<std::string> out;
  for (const auto& c : commands()) out.push_back(c.name);
  return out;
}

Outcome run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Lie-symmetry analysis of polynomial ODEs over exact rationals", "liesym"};
  app.require_subcommand(1);
  std::string file;
  bool as_json = false;
  app.add_option("-f,--file", file, "system file ('-' for stdin)");
  app.add_flag("--json", as_json, "print the report as JSON");

  Invocation inv;
  std::map<std::string, int> int_values;
  std::string at_value, weights_value;
  std::vector<std::pair<const Command*, CLI::App*>> subs;
  std::map<std::string, CLI::Option*> int_opts;
  CLI::Option* at_opt = nullptr;
  CLI::Option* weights_opt = nullptr;
  for (const auto& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("args", inv.args, c.usage);
    for (const auto& o : c.ints) {
      auto* opt = sub->add_option("--" + o.name, int_values[c.name + "/" + o.name], o.help);
      if (o.required) opt->required();
      int_opts[c.name + "/" + o.name] = opt;
    }
    if (c.takes_at) at_opt = sub->add_option("--at", at_value, "rational point 'a,b,...'");
    if (c.takes_weights) weights_opt = sub->add_option("--weights", weights_value, "weights (name or literal)");
    if (c.takes_verify) sub->add_flag("--verify", inv.verify, "verify the result");
    subs.emplace_back(&c, sub);
  }

  Outcome outcome;
  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.out = app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = 2;
    outcome.err = std::string("error: ") + e.what() + "\n";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "-f" || args[i] == "--file") {
        ++i;
        continue;
      }
      if (args[i].starts_with("-")) continue;
      const auto names = command_names();
      if (std::find(names.begin(), names.end(), args[i]) == names.end())
        outcome.err = "error: unknown command '" + args[i] + "'\n";
      break;
    }
    return outcome;
  }

  const Command* cmd = nullptr;
  for (const auto& [c, sub] : subs)
    if (sub->parsed()) cmd = c;
  inv.command = cmd->name;

  SystemFile sys;
  try {
    if (inv.args.size() < cmd->min_args || (cmd->max_args && inv.args.size() > cmd->max_args))
      throw Failure(cmd->name + ": expected arguments " + cmd->usage + ", got " + std::to_string(inv.args.size()));
    for (const auto& o : cmd->ints)
      if (int_opts.at(cmd->name + "/" + o.name)->count()) inv.ints[o.name] = int_values.at(cmd->name + "/" + o.name);
    if (cmd->takes_at && at_opt->count()) inv.at = at_value;
    if (cmd->takes_weights && weights_opt->count()) inv.weights = weights_value;
    if (!file.empty()) {
      std::string text;
      if (file == "-") {
        text = read_all(in);
      } else {
        std::ifstream f(file, std::ios::binary);
        if (!f) throw Failure("cannot open '" + file + "'");
        text = read_all(f);
      }
      try {
        sys = parse_system(text);
      } catch (const ParseError& e) {
        throw Failure((file == "-" ? std::string("<stdin>") : file) + ": " + e.what());
      }
      inv.sys = &sys;
    }
    Report report = cmd->run(inv);
    outcome.out = as_json ? report.j.dump(2) + "\n" : render_text(report.j);
    outcome.exit_code = (report.check && !report.j["valid"].get<bool>()) ? 1 : 0;
  } catch (const Failure& e) {
    outcome.exit_code = 2;
    outcome.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::invalid_argument& e) {
    outcome.exit_code = 2;
    outcome.err = std::string("error: ") + cmd->name + ": " + e.what() + "\n";
  } catch (const std::domain_error& e) {
    outcome.exit_code = 2;
    outcome.err = std::string("error: ") + cmd->name + ": " + e.what() + "\n";
  } catch (const std::out_of_range& e) {
    outcome.exit_code = 2;
    outcome.err = std::string("error: ") + cmd->name + ": " + e.what() + "\n";
  }
  return outcome;
}

}  // namespace liesym::cli
