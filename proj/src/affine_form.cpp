#include "selsolve/affine_form.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace selsolve {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_run = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_run = true;
    } else if (c == '/' && !seen_slash && digit_run) {
      seen_slash = true;
      digit_run = false;
    } else {
      throw std::invalid_argument("malformed rational: " + text);
    }
  }
  if (!digit_run) throw std::invalid_argument("malformed rational: " + text);
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational r;
  if (r.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

char kind_letter(UnknownKind kind) {
  switch (kind) {
    case UnknownKind::C:
      return 'c';
    case UnknownKind::A:
      return 'a';
    case UnknownKind::B:
      return 'b';
  }
  return '?';
}

UnknownKind kind_from_letter(char letter) {
  switch (letter) {
    case 'c':
      return UnknownKind::C;
    case 'a':
      return UnknownKind::A;
    case 'b':
      return UnknownKind::B;
    default:
      throw std::invalid_argument(std::string("unknown kind letter: ") + letter);
  }
}

std::string to_string(UnknownId id) { return kind_letter(id.kind) + std::to_string(id.index); }

UnknownId parse_unknown(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("bad unknown name: " + std::string(name));
  UnknownId id;
  id.kind = kind_from_letter(name[0]);
  std::uint64_t index = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad unknown name: " + std::string(name));
    index = index * 10 + static_cast<std::uint64_t>(c - '0');
    if (index > 0xFFFFFFFFull) throw std::invalid_argument("unknown index overflow");
  }
  id.index = static_cast<std::uint32_t>(index);
  return id;
}

namespace {

auto term_lower_bound(std::vector<Term>& terms, UnknownId id) {
  return std::lower_bound(terms.begin(), terms.end(), id,
                          [](const Term& t, UnknownId key) { return t.id < key; });
}

auto term_lower_bound(const std::vector<Term>& terms, UnknownId id) {
  return std::lower_bound(terms.begin(), terms.end(), id,
                          [](const Term& t, UnknownId key) { return t.id < key; });
}

}  // namespace

AffineForm AffineForm::unknown(UnknownId id, const Rational& coef) {
  AffineForm f;
  if (!selsolve::is_zero(coef)) f.terms_.push_back({id, coef});
  return f;
}

AffineForm AffineForm::from_terms(std::vector<Term> terms, Rational constant) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& x, const Term& y) { return x.id < y.id; });
  AffineForm f(std::move(constant));
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().id == t.id) {
      f.terms_.back().coef += t.coef;
      if (selsolve::is_zero(f.terms_.back().coef)) f.terms_.pop_back();
    } else if (!selsolve::is_zero(t.coef)) {
      f.terms_.push_back(std::move(t));
    }
  }
  return f;
}

Rational AffineForm::coefficient(UnknownId id) const {
  auto it = term_lower_bound(terms_, id);
  return (it != terms_.end() && it->id == id) ? it->coef : Rational(0);
}

bool AffineForm::contains(UnknownId id) const {
  auto it = term_lower_bound(terms_, id);
  return it != terms_.end() && it->id == id;
}

void AffineForm::add_term(UnknownId id, const Rational& coef) {
  if (selsolve::is_zero(coef)) return;
  auto it = term_lower_bound(terms_, id);
  if (it != terms_.end() && it->id == id) {
    it->coef += coef;
    if (selsolve::is_zero(it->coef)) terms_.erase(it);
  } else {
    terms_.insert(it, Term{id, coef});
  }
}

void AffineForm::add_scaled(const AffineForm& other, const Rational& scale) {
  if (selsolve::is_zero(scale)) return;
  const bool unit = is_one(scale);
  if (!selsolve::is_zero(other.constant_)) constant_ += unit ? other.constant_ : scale * other.constant_;
  if (other.terms_.empty()) return;
  if (other.terms_.size() == 1) {
    const Term& t = other.terms_.front();
    add_term(t.id, unit ? t.coef : Rational(scale * t.coef));
    return;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->id < b->id)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->id < a->id) {
      merged.push_back({b->id, unit ? b->coef : Rational(scale * b->coef)});
      ++b;
    } else {
      Rational c = a->coef + (unit ? b->coef : Rational(scale * b->coef));
      if (!selsolve::is_zero(c)) merged.push_back({a->id, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

void AffineForm::scale(const Rational& factor) {
  if (selsolve::is_zero(factor)) {
    constant_ = 0;
    terms_.clear();
    return;
  }
  constant_ *= factor;
  for (auto& t : terms_) t.coef *= factor;
}

Rational AffineForm::remove(UnknownId id) {
  auto it = term_lower_bound(terms_, id);
  if (it == terms_.end() || it->id != id) return 0;
  Rational c = std::move(it->coef);
  terms_.erase(it);
  return c;
}

std::string AffineForm::to_string() const {
  std::string out;
  auto emit = [&](const Rational& c, const std::string& name) {
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (name.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += name;
    }
  };
  for (const auto& t : terms_) emit(t.coef, selsolve::to_string(t.id));
  if (!selsolve::is_zero(constant_)) emit(constant_, "");
  return out.empty() ? "0" : out;
}

AffineForm substitute(const AffineForm& form, const SubstitutionMap& sol) {
  if (sol.empty()) return form;
  AffineForm out(form.constant());
  for (const auto& t : form.terms()) {
    auto it = sol.find(t.id);
    if (it == sol.end())
      out.add_term(t.id, t.coef);
    else
      out.add_scaled(it->second, t.coef);
  }
  return out;
}

Rational evaluate(const AffineForm& form, const Assignment& values) {
  Rational v = form.constant();
  for (const auto& t : form.terms()) {
    auto it = values.find(t.id);
    if (it != values.end()) v += t.coef * it->second;
  }
  return v;
}

AffineForm parse_affine(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty affine expression");
  std::vector<Term> terms;
  Rational constant = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw std::invalid_argument("expected sign in affine expression: " + text);
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string chunk = s.substr(i, j - i);
    if (chunk.empty()) throw std::invalid_argument("dangling sign in: " + text);
    i = j;
    auto star = chunk.find('*');
    if (star != std::string::npos) {
      Rational c = parse_rational(chunk.substr(0, star));
      terms.push_back({parse_unknown(chunk.substr(star + 1)), sign * c});
    } else if (std::isalpha(static_cast<unsigned char>(chunk[0]))) {
      terms.push_back({parse_unknown(chunk), Rational(sign)});
    } else {
      constant += sign * parse_rational(chunk);
    }
  }
  return AffineForm::from_terms(std::move(terms), constant);
}

}  // namespace selsolve
