// Parser, printer and random generation for Polynomial; included from
// polynomial.hpp.

#include <cctype>
#include <sstream>
#include <type_traits>

namespace fano {

namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t position() const { return pos_; }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected unsigned integer", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    if (start == pos_) throw SyntaxError("expected variable", start);
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <Field F>
Polynomial<F> parse(std::string_view text, const std::vector<std::string>& vars, const F& field,
                    MonomialOrder order) {
  using Term = typename Polynomial<F>::Term;
  const std::size_t n = vars.size();
  detail::PolyLexer lex(text);
  std::vector<Term> terms;
  if (lex.at_end()) throw SyntaxError("empty polynomial", 0);

  bool negative = false;
  if (lex.accept('-')) negative = true;
  else lex.accept('+');

  for (;;) {
    // Optional coefficient, possibly carrying its own sign.
    typename F::Element coef = field.one();
    bool have_coef = false;
    if (lex.peek() == '-' ) {
      lex.accept('-');
      negative = !negative;
    }
    if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
      mpz_class num(lex.digits());
      coef = field.from_integer(num);
      if (lex.accept('/')) {
        const std::size_t at = lex.position();
        mpz_class den(lex.digits());
        if (den == 0) throw SyntaxError("zero denominator", at);
        coef = field.mul(coef, field.inv(field.from_integer(den)));
      }
      have_coef = true;
    }
    while (lex.accept('*')) {
    }
    Monomial mono(n);
    bool have_factor = false;
    const char c = lex.peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      for (;;) {
        const std::string name = lex.identifier();
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw UnknownVariable(name);
        const auto idx = static_cast<std::size_t>(it - vars.begin());
        unsigned e = 1;
        if (lex.accept('^')) {
          const std::size_t at = lex.position();
          const std::string ds = lex.digits();
          if (ds.size() > 5 || std::stoul(ds) > 0xFFFF) throw SyntaxError("exponent too large", at);
          e = static_cast<unsigned>(std::stoul(ds));
        }
        mono.set(idx, mono[idx] + e);
        have_factor = true;
        if (!lex.accept('*')) break;
      }
    }
    if (!have_coef && !have_factor) throw SyntaxError("expected term", lex.position());
    if (negative) coef = field.neg(coef);
    terms.push_back({mono, coef});

    if (lex.at_end()) break;
    if (lex.accept('+')) {
      negative = false;
    } else if (lex.accept('-')) {
      negative = true;
    } else {
      throw SyntaxError("unexpected character", lex.position());
    }
  }
  return Polynomial<F>::from_terms(field, n, std::move(terms), order);
}

template <Field F>
std::string to_string(const Polynomial<F>& f, const std::vector<std::string>& names) {
  const auto vars = names.empty() ? default_variable_names(f.nvars()) : names;
  if (f.is_zero()) return "0";
  const F& field = f.field();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto c = t.coefficient;
    bool negative = false;
    if constexpr (std::is_same_v<F, RationalField>) {
      if (sgn(c) < 0) {
        negative = true;
        c = -c;
      }
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = field.equal(c, field.one());
    const bool constant = t.monomial.degree() == 0;
    std::string cs = field.to_string(c);
    if constexpr (std::is_same_v<F, ExtensionField>) {
      if (cs.find(' ') != std::string::npos || cs.find('t') != std::string::npos) cs = "(" + cs + ")";
    }
    if (!unit || constant) {
      os << cs;
      if (!constant) os << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << vars.at(i);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

template <Field F>
Polynomial<F> random_homogeneous(const F& field, std::size_t nvars, unsigned d, Rng& rng,
                                 MonomialOrder order) {
  std::vector<typename Polynomial<F>::Term> ts;
  for (const auto& m : monomials_of_degree(nvars, d)) ts.push_back({m, field.sample(rng)});
  return Polynomial<F>::from_terms(field, nvars, std::move(ts), order);
}

}  // namespace fano
