#include "torusloops/param.hpp"

#include <regex>
#include <stdexcept>

namespace torusloops {

ParamForm ParamForm::c(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("c index");
  ParamForm f;
  f.c_[i - 1] = 1;
  return f;
}

Rational ParamForm::eval(const ParamPoint& p) const {
  Rational r = k_ + mu_ * p.mu;
  for (int i = 0; i < 4; ++i) r += c_[i] * p.c[i];
  return r;
}

bool ParamForm::is_zero() const { return is_constant() && sgn(k_) == 0; }

bool ParamForm::is_constant() const {
  if (sgn(mu_) != 0) return false;
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

ParamForm& ParamForm::operator+=(const ParamForm& o) {
  k_ += o.k_;
  mu_ += o.mu_;
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

ParamForm& ParamForm::operator-=(const ParamForm& o) {
  k_ -= o.k_;
  mu_ -= o.mu_;
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

ParamForm& ParamForm::operator*=(const Rational& s) {
  k_ *= s;
  mu_ *= s;
  for (auto& x : c_) x *= s;
  return *this;
}

bool ParamForm::operator==(const ParamForm& o) const {
  return k_ == o.k_ && mu_ == o.mu_ && c_ == o.c_;
}

bool ParamForm::operator<(const ParamForm& o) const {
  if (int s = cmp(k_, o.k_)) return s < 0;
  if (int s = cmp(mu_, o.mu_)) return s < 0;
  for (int i = 0; i < 4; ++i)
    if (int s = cmp(c_[i], o.c_[i])) return s < 0;
  return false;
}

Rational pf_eval(const ParamForm& f, const ParamPoint& p) { return f.eval(p); }
bool pf_positive_at(const ParamForm& f, const ParamPoint& p) { return f.positive_at(p); }

std::string to_string(const ParamForm& f) {
  std::string out;
  auto put = [&](const Rational& a, const std::string& name) {
    if (sgn(a) == 0) return;
    Rational m = abs(a);
    std::string body;
    if (name.empty())
      body = to_string(m);
    else
      body = (m == 1 ? "" : to_string(m) + "*") + name;
    if (out.empty())
      out = (sgn(a) < 0 ? "-" : "") + body;
    else
      out += (sgn(a) < 0 ? " - " : " + ") + body;
  };
  put(f.mu_coeff(), "mu");
  for (int i = 1; i <= 4; ++i) put(f.c_coeff(i), "c" + std::to_string(i));
  put(f.constant(), "");
  return out.empty() ? "0" : out;
}

// Inverse of to_string: terms like "3/2*mu", "-c3", "1/2".
ParamForm parse_param_form(std::string_view sv) {
  std::string s;
  for (char ch : sv)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty form");
  static const std::regex term(R"(([+-]?)(\d+(?:/\d+)?)?(\*?)(mu|c[1-4])?)");
  ParamForm f;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::smatch m;
    std::string rest = s.substr(pos);
    if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) ||
        m.length(0) == 0 || (!m[2].matched && !m[4].matched) ||
        (m[3].length() > 0 && (!m[2].matched || !m[4].matched)) ||
        (pos > 0 && !m[1].matched) || (pos > 0 && m[1].length() == 0))
      throw std::invalid_argument("malformed form: " + std::string(sv));
    Rational a = m[2].matched ? parse_rational(m[2].str()) : Rational(1);
    if (m[1].str() == "-") a = -a;
    if (!m[4].matched)
      f += ParamForm(a);
    else if (m[4].str() == "mu")
      f += ParamForm::mu() * a;
    else
      f += ParamForm::c(m[4].str()[1] - '0') * a;
    pos += m.length(0);
  }
  return f;
}

}  // namespace torusloops
