#include "selsolve/symmetry.hpp"

#include <array>
#include <cstdlib>
#include <string>

#include "selsolve/errors.hpp"

namespace selsolve {

namespace {

using G = Generator;

void check_degree(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (static_cast<std::size_t>(degree) + 4 > Word::kMaxLength)
    throw TooLarge("degree " + std::to_string(degree) + " exceeds word length limit");
}

void check_unknowns(std::size_t count) {
  const std::size_t limit = desk_scale_limit();
  if (count > limit)
    throw TooLarge(std::to_string(count) + " unknowns exceed the desk-scale limit of " +
                   std::to_string(limit) + " (set SELECTIVE_SOLVE_MAX_UNKNOWNS to raise it)");
}

}  // namespace

ODESystem ODESystem::kontsevich() {
  NCPoly p1;
  p1.add(Word{G::U, G::V}, 1);
  p1.add(Word{G::U, G::Vinv}, -1);
  p1.add(Word{G::Vinv}, -1);
  NCPoly p2;
  p2.add(Word{G::V, G::U}, -1);
  p2.add(Word{G::V, G::Uinv}, 1);
  p2.add(Word{G::Uinv}, 1);
  return ODESystem{Derivation(std::move(p1), std::move(p2), "Dt")};
}

Word first_integral_word(FirstIntegral which) {
  return which == FirstIntegral::I ? Word{G::U, G::V, G::Uinv, G::Vinv}
                                   : Word{G::V, G::U, G::Vinv, G::Uinv};
}

NCPoly first_integral(FirstIntegral which) { return NCPoly::monomial(first_integral_word(which)); }

std::size_t ansatz_term_count(int degree) {
  std::size_t t = 1;
  for (int i = 0; i < degree; ++i) t = 3 * t + 2;
  return t;
}

NCPoly general_polynomial(int degree, UnknownKind kind, std::uint32_t offset) {
  NCPoly p;
  const auto words = reduced_words_up_to(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < words.size(); ++i)
    p.add(words[i], AffineForm::unknown({kind, offset + static_cast<std::uint32_t>(i)}));
  return p;
}

std::vector<UnknownId> SymmetryAnsatz::unknowns() const {
  std::vector<UnknownId> out(unknown_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = UnknownId::c(static_cast<std::uint32_t>(i));
  return out;
}

SymmetryAnsatz build_ansatz(int degree) {
  check_degree(degree);
  SymmetryAnsatz ans;
  ans.degree = degree;
  ans.words = reduced_words_up_to(static_cast<std::size_t>(degree));
  const auto t = static_cast<std::uint32_t>(ans.words.size());
  NCPoly q1 = general_polynomial(degree, UnknownKind::C, 0);
  NCPoly q2 = general_polynomial(degree, UnknownKind::C, t);
  ans.dtau = Derivation(std::move(q1), std::move(q2), "Dtau");
  return ans;
}

SymmetryAnsatz prune_ansatz(const SymmetryAnsatz& ansatz, const ZeroRegistry& reg) {
  SymmetryAnsatz out;
  out.degree = ansatz.degree;
  out.words = ansatz.words;
  out.dtau = Derivation(prune_ncpoly(ansatz.dtau.image_u(), reg),
                        prune_ncpoly(ansatz.dtau.image_v(), reg), ansatz.dtau.name());
  return out;
}

NCPoly formulate_symcon(const ODESystem& sys, const SymmetryAnsatz& ansatz, Generator which) {
  if (which != G::U && which != G::V)
    throw std::invalid_argument("symmetry condition is formulated for u or v");
  NCPoly out = apply_derivation(ansatz.dtau, sys.dt.image(which));
  out -= apply_derivation(sys.dt, ansatz.dtau.image(which));
  return out;
}

NecessaryCondition formulate_nc(const ODESystem& sys, const SymmetryAnsatz& ansatz,
                                FirstIntegral target, int k0) {
  if (k0 < 0) throw std::invalid_argument("k0 must be non-negative");
  const NCPoly integral = first_integral(target);
  if (!apply_derivation(sys.dt, integral).is_zero())
    throw NotFirstIntegral(first_integral_word(target).to_string() +
                           " is not a first integral of the system");

  NecessaryCondition nc;
  nc.target = target;
  nc.k0 = k0;
  nc.residual = apply_derivation(ansatz.dtau, integral);
  const NCPoly i_poly = first_integral(FirstIntegral::I);
  const UnknownKind kind = target == FirstIntegral::I ? UnknownKind::A : UnknownKind::B;
  for (int k = -k0; k <= k0; ++k) {
    const UnknownId aux{kind, static_cast<std::uint32_t>(k + k0)};
    nc.aux.push_back(aux);
    const NCPoly power = poly_pow(i_poly, k);
    for (const auto& [w, c] : power.terms())
      nc.residual.add(w, AffineForm::unknown(aux, -c.constant()));
  }
  return nc;
}

LinearSystem complete_split(const NCPoly& p, std::span<const UnknownId> universe) {
  LinearSystem sys;
  sys.add_unknowns(universe);
  sys.equations().reserve(p.size());
  for (const auto& [w, coef] : p.terms()) sys.add_equation(canonical_form(coef));
  return sys;
}

std::size_t selective_split(const NCPoly& p, ZeroRegistry& reg) {
  std::size_t found = 0;
  for (const auto& [w, coef] : p.terms()) {
    if (!is_zero(coef.constant())) continue;
    const Term* single = nullptr;
    bool several = false;
    for (const auto& t : coef.terms()) {
      if (reg.contains(t.id)) continue;
      if (single) {
        several = true;
        break;
      }
      single = &t;
    }
    if (single && !several && reg.insert(single->id)) ++found;
  }
  return found;
}

void prune_ncpoly_in_place(NCPoly& p, const ZeroRegistry& reg) {
  if (reg.empty()) return;
  p.transform_coefficients([&](AffineForm& f) { prune_zeros_in_place(f, reg); });
}

NCPoly prune_ncpoly(const NCPoly& p, const ZeroRegistry& reg) {
  NCPoly out = p;
  prune_ncpoly_in_place(out, reg);
  return out;
}

SplitCounts count_split(const NCPoly& p, std::optional<UnknownKind> only) {
  SplitCounts counts;
  for (const auto& [w, coef] : p.terms()) {
    std::size_t terms = 0;
    for (const auto& t : coef.terms())
      if (!only || t.id.kind == *only) ++terms;
    if (only ? terms > 0 : !coef.is_zero()) {
      ++counts.equations;
      counts.terms += terms;
    }
  }
  return counts;
}

std::size_t desk_scale_limit() {
  if (const char* env = std::getenv("SELECTIVE_SOLVE_MAX_UNKNOWNS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultDeskScaleLimit;
}

SolutionState find_first_integrals(const ODESystem& sys, int degree) {
  check_degree(degree);
  check_unknowns(ansatz_term_count(degree));
  const NCPoly ansatz = general_polynomial(degree);
  std::vector<UnknownId> universe(ansatz.size());
  for (std::size_t i = 0; i < universe.size(); ++i)
    universe[i] = UnknownId::c(static_cast<std::uint32_t>(i));
  return lsss_solve(complete_split(apply_derivation(sys.dt, ansatz), universe));
}

std::vector<NCPoly> solution_polynomials(const SolutionState& state, const NCPoly& ansatz) {
  std::vector<NCPoly> out;
  for (const Assignment& values : solution_basis(state)) {
    NCPoly p;
    for (const auto& [w, coef] : ansatz.terms()) p.add(w, evaluate(coef, values));
    out.push_back(std::move(p));
  }
  return out;
}

SystemStats system_stats(const ODESystem& sys, int degree) {
  check_degree(degree);
  const SymmetryAnsatz ans = build_ansatz(degree);
  check_unknowns(ans.unknown_count());

  SystemStats stats;
  stats.n = degree;
  stats.k = ans.unknown_count();

  const NecessaryCondition nc = formulate_nc(sys, ans, FirstIntegral::I);
  // e1/t1 describe D_tau I = 0 itself; the aux terms only add the equations
  // that force every a_k to vanish.
  const SplitCounts c1 = count_split(nc.residual, UnknownKind::C);
  stats.e1 = c1.equations;
  stats.t1 = c1.terms;

  std::vector<UnknownId> universe = ans.unknowns();
  universe.insert(universe.end(), nc.aux.begin(), nc.aux.end());
  LinearSystem full = complete_split(nc.residual, universe);
  for (Generator g : {G::U, G::V}) {
    const NCPoly cond = formulate_symcon(sys, ans, g);
    const SplitCounts c = count_split(cond);
    stats.e2 += c.equations;
    stats.t2 += c.terms;
    full.append(complete_split(cond));
  }
  stats.p = lsss_solve(full).free.size();
  return stats;
}

std::optional<SystemStats> reference_stats(int degree) {
  static constexpr std::array<std::array<std::size_t, 6>, 12> kTable = {{
      {106, 142, 192, 448, 1034, 1},
      {322, 430, 616, 1412, 3706, 2},
      {970, 1294, 1904, 4448, 12914, 4},
      {2914, 3886, 5784, 13878, 44098, 5},
      {8746, 11662, 17440, 43052, 148346, 7},
      {26242, 34990, 52424, 132954, 493162, 8},
      {78730, 104974, 157392, 409470, 1623842, 12},
      {236194, 314926, 472312, 1258526, 5304562, 13},
      {708586, 944782, 1417088, 3862086, 17212778, 17},
      {2125762, 2834350, 4251432, 11835758, 55535578, 18},
      {6377290, 8503054, 12754480, 36228892, 178298450, 24},
      {19131874, 25509166, 38263640, 110777292, 569970466, 25},
  }};
  if (degree < 3 || degree > 14) return std::nullopt;
  const auto& row = kTable[static_cast<std::size_t>(degree - 3)];
  return SystemStats{degree, row[0], row[1], row[2], row[3], row[4], row[5]};
}

}  // namespace selsolve
