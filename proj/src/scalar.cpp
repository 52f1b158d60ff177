#include "ybe/scalar.hpp"

#include <sstream>

#include "ybe/errors.hpp"

namespace ybe {

Scalar::Scalar(long v) {
  if (v != 0) terms_[{0, 0}] = Rational(v);
}

Scalar::Scalar(const Rational& v) {
  if (v != 0) terms_[{0, 0}] = v;
}

Scalar Scalar::var(int slot, int power) {
  Scalar s;
  Key k{0, 0};
  k[static_cast<size_t>(slot)] = power;
  s.terms_[k] = Rational(1);
  return s;
}

bool Scalar::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Key{0, 0};
}

Rational Scalar::constant() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw InternalError("Scalar::constant on non-constant polynomial");
  return terms_.begin()->second;
}

void Scalar::add_term(const Key& k, const Rational& c) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  TermMap prod;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      Key k{ka[0] + kb[0], ka[1] + kb[1]};
      auto it = prod.find(k);
      if (it == prod.end()) {
        prod.emplace(k, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  }
  for (auto it = prod.begin(); it != prod.end();) {
    it = (it->second == 0) ? prod.erase(it) : std::next(it);
  }
  terms_ = std::move(prod);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

int Scalar::degree(int slot) const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k[static_cast<size_t>(slot)]);
  return d;
}

Scalar Scalar::eval(const std::vector<std::pair<int, Rational>>& assign) const {
  Rational vals[2] = {Rational(0), Rational(0)};
  bool have[2] = {false, false};
  for (const auto& [slot, v] : assign) {
    vals[slot] = v;
    have[slot] = true;
  }
  for (int slot = 0; slot < 2; ++slot) {
    if (uses(slot) && !have[slot])
      throw MalformedInput("missing assignment for indeterminate slot " + std::to_string(slot));
  }
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    Rational t = c;
    for (int slot = 0; slot < 2; ++slot) {
      for (int p = 0; p < k[static_cast<size_t>(slot)]; ++p) t *= vals[slot];
    }
    acc += t;
  }
  return Scalar(acc);
}

std::string Scalar::str(const std::array<std::string, 2>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (int slot = 0; slot < 2; ++slot) {
      int e = k[static_cast<size_t>(slot)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[static_cast<size_t>(slot)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << a;
    } else if (a == 1) {
      os << mono;
    } else {
      os << a << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace ybe
