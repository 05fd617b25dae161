#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "selsolve/linear_system.hpp"
#include "selsolve/lsss.hpp"
#include "selsolve/ncpoly.hpp"
#include "selsolve/zero_registry.hpp"

namespace selsolve {

/// u_t = P1, v_t = P2 with unknown-free Laurent polynomials P1, P2.
struct ODESystem {
  Derivation dt;

  /// u_t = u v - u v^-1 - v^-1,  v_t = -v u + v u^-1 + u^-1.
  static ODESystem kontsevich();
};

enum class FirstIntegral { I, IInverse };

/// I = u v u^-1 v^-1 and I^-1 = v u v^-1 u^-1.
Word first_integral_word(FirstIntegral which);
NCPoly first_integral(FirstIntegral which);

/// Terms per ansatz polynomial: t(0) = 1, t(n) = 3 t(n-1) + 2.
std::size_t ansatz_term_count(int degree);

/// Sum of c_{offset+i} * w_i over all reduced words w_i of degree <= n.
NCPoly general_polynomial(int degree, UnknownKind kind = UnknownKind::C, std::uint32_t offset = 0);

/// The most general symmetry generator (Q1, Q2) of degree <= n: one fresh
/// unknown per word, c_0..c_{t-1} in Q1 and c_t..c_{2t-1} in Q2.
struct SymmetryAnsatz {
  int degree = 0;
  std::vector<Word> words;
  Derivation dtau;

  std::size_t terms_per_component() const noexcept { return words.size(); }
  std::size_t unknown_count() const noexcept { return 2 * words.size(); }
  UnknownId q1_unknown(std::size_t i) const { return UnknownId::c(static_cast<std::uint32_t>(i)); }
  UnknownId q2_unknown(std::size_t i) const {
    return UnknownId::c(static_cast<std::uint32_t>(words.size() + i));
  }
  std::vector<UnknownId> unknowns() const;
};

SymmetryAnsatz build_ansatz(int degree);
/// Same ansatz with registered zeros dropped from Q1, Q2.
SymmetryAnsatz prune_ansatz(const SymmetryAnsatz& ansatz, const ZeroRegistry& reg);

/// D_tau(D_t x) - D_t(D_tau x) for x = u or v.
NCPoly formulate_symcon(const ODESystem& sys, const SymmetryAnsatz& ansatz, Generator which);

inline constexpr int kDefaultK0 = 3;

/// D_tau(target) - sum_{k=-k0}^{k0} aux_k target^k with aux_k = a_{k+k0} for
/// I and b_{k+k0} for I^-1.
struct NecessaryCondition {
  FirstIntegral target = FirstIntegral::I;
  int k0 = kDefaultK0;
  std::vector<UnknownId> aux;
  NCPoly residual;
};

/// Throws NotFirstIntegral unless D_t(target) = 0 for sys.
NecessaryCondition formulate_nc(const ODESystem& sys, const SymmetryAnsatz& ansatz,
                                FirstIntegral target, int k0 = kDefaultK0);

/// One canonical equation per word of p, in word order; equal equations from
/// distinct words are all kept. The universe is `universe` plus every
/// unknown of p.
LinearSystem complete_split(const NCPoly& p, std::span<const UnknownId> universe = {});

/// Single pass over p: every word whose pruned coefficient is c*x registers x
/// as zero. p is not modified. Returns the number of new zeros.
std::size_t selective_split(const NCPoly& p, ZeroRegistry& reg);

NCPoly prune_ncpoly(const NCPoly& p, const ZeroRegistry& reg);
void prune_ncpoly_in_place(NCPoly& p, const ZeroRegistry& reg);

/// Equation and term counts of complete_split(p), optionally restricted to
/// unknowns of one kind.
struct SplitCounts {
  std::size_t equations = 0;
  std::size_t terms = 0;
};
SplitCounts count_split(const NCPoly& p, std::optional<UnknownKind> only = std::nullopt);

/// Maximum number of unknowns handled by the formulation entry points.
/// SELECTIVE_SOLVE_MAX_UNKNOWNS overrides the default.
std::size_t desk_scale_limit();
inline constexpr std::size_t kDefaultDeskScaleLimit = 30000;

/// Solves D_t(general_polynomial(n)) = 0. |free| is the dimension of the first
/// integrals of degree <= n, constants included.
SolutionState find_first_integrals(const ODESystem& sys, int degree);

/// Polynomials spanned by a solved ansatz: one per free unknown (that unknown
/// 1, the others 0).
std::vector<NCPoly> solution_polynomials(const SolutionState& state, const NCPoly& ansatz);

/// n, unknowns k, equations/terms of D_tau I = 0 (e1, t1) and of both
/// symmetry conditions (e2, t2), and free parameters p.
struct SystemStats {
  int n = 0;
  std::size_t k = 0, e1 = 0, t1 = 0, e2 = 0, t2 = 0, p = 0;

  friend bool operator==(const SystemStats&, const SystemStats&) = default;
};

/// Formulates and splits everything, counts, and solves with lsss_solve.
/// Throws TooLarge beyond desk_scale_limit().
SystemStats system_stats(const ODESystem& sys, int degree);

/// Published reference row for 3 <= n <= 14.
std::optional<SystemStats> reference_stats(int degree);

}  // namespace selsolve
