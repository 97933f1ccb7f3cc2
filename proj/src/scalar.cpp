#include "contactlie/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace contactlie {

ScalarContext::Ptr ScalarContext::make(std::vector<ParamInfo> params) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (params[i].name == params[j].name)
        throw ScalarError("duplicate parameter name: " + params[i].name);
    const auto& p = params[i];
    if (!p.relation_tail.empty() && p.relation_tail.size() < 2)
      throw ScalarError("relation degree must be >= 2 for " + p.name);
    if (!p.relation_tail.empty() && p.reciprocal_of >= 0)
      throw ScalarError("parameter cannot carry both a relation and a reciprocal: " + p.name);
    if (p.reciprocal_of >= 0) {
      if (p.reciprocal_of < 0 || std::size_t(p.reciprocal_of) >= params.size())
        throw ScalarError("reciprocal partner out of range for " + p.name);
      const auto& q = params[p.reciprocal_of];
      if (q.reciprocal_of != int(i))
        throw ScalarError("reciprocal pairing must be mutual: " + p.name);
      if (!q.relation_tail.empty())
        throw ScalarError("reciprocal partner cannot carry a relation: " + q.name);
    }
  }
  return Ptr(new ScalarContext(std::move(params)));
}

ScalarContext::Ptr ScalarContext::make_simple(const std::vector<std::string>& names) {
  std::vector<ParamInfo> ps;
  ps.reserve(names.size());
  for (const auto& n : names) ps.push_back(ParamInfo{n, {}, -1});
  return make(std::move(ps));
}

int ScalarContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i].name == name) return int(i);
  return -1;
}

bool ScalarContext::has_relations() const {
  for (const auto& p : params_)
    if (!p.relation_tail.empty() || p.reciprocal_of >= 0) return true;
  return false;
}

bool ScalarContext::same_content(const ScalarContext& other) const {
  if (params_.size() != other.params_.size()) return false;
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (params_[i].name != other.params_[i].name) return false;
    if (params_[i].relation_tail != other.params_[i].relation_tail) return false;
    if (params_[i].reciprocal_of != other.params_[i].reciprocal_of) return false;
  }
  return true;
}

Scalar Scalar::constant(Rational value, ScalarContext::Ptr ctx) {
  Scalar s(std::move(ctx));
  if (value != 0) s.terms_.emplace(Monomial(s.ctx_->size(), 0), std::move(value));
  return s;
}

Scalar Scalar::parameter(const std::string& name, ScalarContext::Ptr ctx) {
  int idx = ctx->index_of(name);
  if (idx < 0) throw ScalarError("unknown parameter: " + name);
  Scalar s(std::move(ctx));
  Monomial m(s.ctx_->size(), 0);
  m[idx] = 1;
  s.terms_.emplace(std::move(m), Rational(1));
  return s;
}

bool Scalar::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

Rational Scalar::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw ScalarError("scalar is not constant: " + to_string());
  return terms_.begin()->second;
}

std::optional<Rational> Scalar::as_rational() const {
  if (!is_constant()) return std::nullopt;
  return constant_value();
}

static void check_ctx(const Scalar& a, const Scalar& b) {
  if (!contexts_compatible(a.context(), b.context()))
    throw ScalarError("scalar context mismatch");
}

Scalar Scalar::operator-() const {
  Scalar r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  check_ctx(*this, rhs);
  Scalar r = *this;
  for (const auto& [m, c] : rhs.terms_) {
    auto it = r.terms_.find(m);
    if (it == r.terms_.end()) {
      r.terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  check_ctx(*this, rhs);
  Scalar r(ctx_);
  const std::size_t n = ctx_->size();
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      auto it = r.terms_.find(m);
      if (it == r.terms_.end())
        r.terms_.emplace(std::move(m), ca * cb);
      else
        it->second += ca * cb;
    }
  }
  r.reduce();
  return r;
}

Scalar Scalar::operator*(const Rational& c) const {
  if (c == 0) return Scalar(ctx_);
  Scalar r(ctx_);
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar acc = Scalar::one(ctx_);
  Scalar base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& rhs) const {
  check_ctx(*this, rhs);
  return terms_ == rhs.terms_;
}

void Scalar::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != ctx_->size()) throw ScalarError("monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end())
    terms_.emplace(m, c);
  else
    it->second += c;
}

// Rewrites until every term is in normal form. Relation rewrite replaces one
// term by up to deg smaller-degree terms; the bounded exponent strictly drops,
// so this terminates.
void Scalar::reduce() {
  const std::size_t n = ctx_->size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0) {
        it = terms_.erase(it);
        changed = true;
        continue;
      }
      const Monomial& m = it->first;
      bool rewritten = false;
      for (std::size_t i = 0; i < n && !rewritten; ++i) {
        const ParamInfo& p = ctx_->param(i);
        if (!p.relation_tail.empty() && m[i] >= p.relation_tail.size()) {
          // x^e = x^{e-d} * (tail), d = relation degree
          const unsigned d = unsigned(p.relation_tail.size());
          Monomial base = m;
          base[i] -= d;
          Rational coeff = it->second;
          it = terms_.erase(it);
          for (unsigned k = 0; k < d; ++k) {
            if (p.relation_tail[k] == 0) continue;
            Monomial t = base;
            t[i] += k;
            auto jt = terms_.find(t);
            if (jt == terms_.end())
              terms_.emplace(std::move(t), coeff * p.relation_tail[k]);
            else
              jt->second += coeff * p.relation_tail[k];
          }
          rewritten = true;
          changed = true;
        } else if (p.reciprocal_of >= 0 && m[i] > 0 && m[std::size_t(p.reciprocal_of)] > 0 &&
                   int(i) < p.reciprocal_of) {
          const std::size_t j = std::size_t(p.reciprocal_of);
          const unsigned drop = std::min(m[i], m[j]);
          Monomial t = m;
          t[i] -= drop;
          t[j] -= drop;
          Rational coeff = it->second;
          it = terms_.erase(it);
          auto jt = terms_.find(t);
          if (jt == terms_.end())
            terms_.emplace(std::move(t), std::move(coeff));
          else
            jt->second += coeff;
          rewritten = true;
          changed = true;
        }
      }
      if (!rewritten) ++it;
    }
  }
}

Scalar Scalar::substitute(const std::map<std::string, Scalar>& bindings) const {
  std::vector<const Scalar*> by_index(ctx_->size(), nullptr);
  for (const auto& [name, value] : bindings) {
    int idx = ctx_->index_of(name);
    if (idx < 0) throw ScalarError("substitute: unknown parameter " + name);
    if (!contexts_compatible(ctx_, value.context()))
      throw ScalarError("substitute: value context incompatible for " + name);
    by_index[std::size_t(idx)] = &value;
  }
  Scalar result(ctx_);
  for (const auto& [m, c] : terms_) {
    Scalar term = Scalar::constant(c, ctx_);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (by_index[i]) {
        term = term * by_index[i]->pow(m[i]);
      } else {
        Monomial single(ctx_->size(), 0);
        single[i] = m[i];
        Scalar mono(ctx_);
        mono.terms_.emplace(std::move(single), Rational(1));
        term = term * mono;
      }
    }
    result = result + term;
  }
  result.reduce();
  return result;
}

Scalar Scalar::substitute_rationals(const std::map<std::string, Rational>& bindings) const {
  std::map<std::string, Scalar> b;
  for (const auto& [name, value] : bindings) b.emplace(name, Scalar::constant(value, ctx_));
  return substitute(b);
}

unsigned Scalar::degree_in(std::size_t param_index) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[param_index]);
  return d;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (has_vars) vars << "*";
      vars << ctx_->param(i).name;
      if (m[i] > 1) vars << "^" << m[i];
      has_vars = true;
    }
    if (!has_vars) {
      out << rat_to_string(a);
    } else if (a == 1) {
      out << vars.str();
    } else {
      out << rat_to_string(a) << "*" << vars.str();
    }
  }
  return out.str();
}

// ------------------------- expression parser -------------------------

namespace {

class Parser {
 public:
  Parser(const std::string& text, ScalarContext::Ptr ctx)
      : text_(text), ctx_(std::move(ctx)) {}

  Scalar parse() {
    Scalar e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ScalarParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Scalar expr() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    Scalar acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Scalar term() {
    Scalar acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Scalar factor() {
    Scalar base = primary();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        base = base.pow(natural());
      } else {
        break;
      }
    }
    return base;
  }

  unsigned natural() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected natural number exponent");
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + unsigned(text_[pos_] - '0');
      if (v > 1u << 20) fail("exponent too large");
      ++pos_;
    }
    return unsigned(v);
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal(false);
    if (c == '-') {
      // covers literals like "-1/2" appearing where a factor is expected
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        return rational_literal(true);
      return -primary();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  Scalar rational_literal(bool negative) {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    std::string denom;
    skip_ws();
    // '/' binds to the literal only when followed by digits (grammar: rational)
    std::size_t save = pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        denom += text_[pos_++];
      if (denom.empty()) {
        pos_ = save;
      } else if (denom.find_first_not_of('0') == std::string::npos) {
        fail("zero denominator");
      }
    }
    std::string lit = (negative ? "-" : "") + digits + (denom.empty() ? "" : "/" + denom);
    return Scalar::constant(rat_from_string(lit), ctx_);
  }

  Scalar identifier() {
    std::string name;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
      name += text_[pos_++];
    int idx = ctx_->index_of(name);
    if (idx < 0) fail("unknown parameter name '" + name + "'");
    return Scalar::parameter(name, ctx_);
  }

  const std::string& text_;
  ScalarContext::Ptr ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text, ScalarContext::Ptr ctx) {
  return Parser(text, std::move(ctx)).parse();
}

std::vector<Rational> parse_relation(const std::string& text, const std::string& param) {
  auto ctx = ScalarContext::make_simple({param});
  Scalar p = parse_scalar(text, ctx);
  unsigned deg = p.degree_in(0);
  if (deg < 2) throw ScalarError("relation degree must be >= 2: " + text);
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) coeffs[m[0]] = c;
  if (coeffs[deg] != 1) throw ScalarError("relation must be monic: " + text);
  // p(x) = 0  =>  x^deg = -(lower part)
  std::vector<Rational> tail(deg);
  for (unsigned k = 0; k < deg; ++k) tail[k] = -coeffs[k];
  return tail;
}

}  // namespace contactlie
