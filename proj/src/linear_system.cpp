#include "selsolve/linear_system.hpp"

#include <algorithm>

namespace selsolve {

AffineForm canonical_form(AffineForm form) {
  if (form.is_zero()) return AffineForm{};
  Integer lcd = 1;
  auto absorb_den = [&](const Rational& r) { mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), r.get_den_mpz_t()); };
  absorb_den(form.constant());
  for (const auto& t : form.terms()) absorb_den(t.coef);

  Integer content = 0;
  auto absorb_num = [&](const Rational& r) {
    Integer scaled = r.get_num() * (lcd / r.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  };
  absorb_num(form.constant());
  for (const auto& t : form.terms()) absorb_num(t.coef);

  Rational factor(lcd, content);
  factor.canonicalize();
  const Rational& lead = form.has_unknowns() ? form.terms().front().coef : form.constant();
  if (sgn(lead) < 0) factor = -factor;
  if (factor != 1) form.scale(factor);
  return form;
}

Equation canonicalize(Equation e) {
  e.lhs = canonical_form(std::move(e.lhs));
  return e;
}

void LinearSystem::note_unknowns(const AffineForm& f) {
  for (const auto& t : f.terms()) add_unknown(t.id);
}

void LinearSystem::add_equation(AffineForm lhs) {
  note_unknowns(lhs);
  equations_.push_back(Equation{std::move(lhs), equations_.size()});
}

void LinearSystem::push_back(Equation e) {
  note_unknowns(e.lhs);
  equations_.push_back(std::move(e));
}

void LinearSystem::add_unknown(UnknownId id) {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), id);
  if (it == universe_.end() || *it != id) universe_.insert(it, id);
}

void LinearSystem::add_unknowns(std::span<const UnknownId> ids) {
  universe_.insert(universe_.end(), ids.begin(), ids.end());
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
}

void LinearSystem::append(const LinearSystem& other) {
  add_unknowns(other.universe_);
  equations_.reserve(equations_.size() + other.equations_.size());
  for (const auto& e : other.equations_) add_equation(e.lhs);
}

std::size_t LinearSystem::total_terms() const {
  std::size_t n = 0;
  for (const auto& e : equations_) n += e.lhs.term_count();
  return n;
}

bool LinearSystem::contains_unknown(UnknownId id) const {
  return std::binary_search(universe_.begin(), universe_.end(), id);
}

bool LinearSystem::is_closed() const {
  for (const auto& e : equations_)
    for (const auto& t : e.lhs.terms())
      if (!contains_unknown(t.id)) return false;
  return true;
}

}  // namespace selsolve
