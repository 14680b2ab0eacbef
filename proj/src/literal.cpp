#include "freyd/literal.hpp"

#include <cctype>

#include "freyd/errors.hpp"
#include "freyd/structure.hpp"

namespace freyd {

namespace {

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (b == pos_) fail("expected a word");
    return s_.substr(b, pos_ - b);
  }
  Scalar integer() {
    skip();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = b;
      fail("expected an integer");
    }
    try {
      return std::stoll(s_.substr(b, pos_ - b));
    } catch (const std::out_of_range&) {
      pos_ = b;
      fail("integer out of range");
    }
  }
  void keyword(const std::string& k) {
    std::size_t b = pos_;
    if (word() != k) {
      pos_ = b;
      fail("expected '" + k + "'");
    }
  }
  bool lookahead_word(const std::string& k) {
    skip();
    return s_.compare(pos_, k.size(), k) == 0 &&
           (pos_ + k.size() >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + k.size()])));
  }
  void finish() {
    if (!at_end()) fail("trailing input");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
  }

  CoeffRing ring() {
    std::size_t b = pos_;
    if (word() != "Z") {
      pos_ = b;
      fail("expected a ring Z or Z/n");
    }
    if (!accept('/')) return CoeffRing::integers();
    b = pos_;
    Scalar n = integer();
    if (n < 2) {
      pos_ = b;
      fail("modulus must be at least 2");
    }
    return CoeffRing::mod(n);
  }

  // Rows of a bracketed matrix; cols < 0 when unknown.
  Mat rows(const CoeffRing& R, long rows_hint, long cols) {
    std::vector<std::vector<Scalar>> rs;
    expect('[');
    if (!accept(']')) {
      do {
        std::size_t b = pos_;
        expect('[');
        std::vector<Scalar> r;
        if (!accept(']')) {
          do r.push_back(integer());
          while (accept(','));
          expect(']');
        }
        if (cols >= 0 && static_cast<long>(r.size()) != cols) {
          pos_ = b;
          fail("row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(cols));
        }
        cols = static_cast<long>(r.size());
        rs.push_back(std::move(r));
      } while (accept(','));
      expect(']');
    }
    // "[]" with a shape stands for any matrix without entries
    if (rs.empty() && rows_hint > 0 && cols == 0) return Mat(R, static_cast<std::size_t>(rows_hint), 0);
    if (rows_hint >= 0 && static_cast<long>(rs.size()) != rows_hint) fail("row count does not match the shape");
    if (cols < 0) cols = 0;
    std::vector<Scalar> entries;
    for (auto& r : rs)
      for (Scalar x : r) entries.push_back(R.is_finite() ? R.reduce(x) : x);
    return Mat(R, rs.size(), static_cast<std::size_t>(cols), entries);
  }

  Mat matrix() {
    CoeffRing R = ring();
    long r = -1, c = -1;
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      r = integer();
      std::string x = word();  // "x<cols>" lexes as one word
      if (x.size() < 2 || x[0] != 'x') fail("expected a shape like 2x3");
      try {
        c = std::stol(x.substr(1));
      } catch (const std::exception&) {
        fail("expected a shape like 2x3");
      }
    }
    return rows(R, r, c);
  }

  FPMod module() {
    if (lookahead_word("mod")) {
      keyword("mod");
      CoeffRing R = ring();
      keyword("gens");
      Scalar g = integer();
      if (g < 0) fail("negative generator count");
      keyword("rels");
      Mat rels = rows(R, -1, g);
      return FPMod(R, static_cast<std::size_t>(g), rels);
    }
    std::string w = word();
    if (w != "free" && w != "cyc") fail("expected a module literal");
    expect('(');
    CoeffRing R = ring();
    expect(',');
    Scalar k = integer();
    expect(')');
    if (w == "free") {
      if (k < 0) fail("negative rank");
      return FPMod::free(R, static_cast<std::size_t>(k));
    }
    return FPMod::cyclic(R, k);
  }

  FPFunctor functor() {
    std::size_t b = pos_;
    std::string w = word();
    expect('(');
    FPFunctor out;
    if (w == "yon") {
      out = yoneda(module());
    } else if (w == "rad") {
      out = radical_rep(module()).object;
    } else if (w == "simple") {
      out = cokernel_f(radical_rep(module()).inclusion).object;
    } else if (w == "ker") {
      out = kernel_f(funhom_body()).object;
    } else if (w == "coker") {
      out = cokernel_f(funhom_body()).object;
    } else if (w == "tensor") {
      FPFunctor f = functor();
      expect(',');
      FPFunctor g = functor();
      out = tensor_general(f, g);
    } else if (w == "pres") {
      FPMod m = module();
      expect(',');
      FPMod n = module();
      expect(',');
      out = FPFunctor(ModHom(m, n, matrix()));
    } else {
      pos_ = b;
      fail("unknown functor '" + w + "'");
    }
    expect(')');
    return out;
  }

  FunHom funhom_body() {
    std::size_t b = pos_;
    std::string w = word();
    expect('(');
    FunHom out;
    if (w == "yonmap") {
      FPMod m = module();
      expect(',');
      FPMod n = module();
      expect(',');
      out = yoneda_map(ModHom(m, n, matrix()));
    } else if (w == "hom") {
      FPFunctor f = functor();
      expect(',');
      FPFunctor g = functor();
      expect(',');
      Mat u = matrix();
      expect(',');
      Mat v = matrix();
      out = FunHom(f, g, ModHom(g.m(), f.m(), u), ModHom(g.n(), f.n(), v));
    } else {
      pos_ = b;
      fail("unknown morphism '" + w + "'");
    }
    expect(')');
    return out;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

CoeffRing parse_ring(const std::string& text) {
  Reader r(text);
  CoeffRing R = r.ring();
  r.finish();
  return R;
}

Mat parse_matrix(const std::string& text) {
  Reader r(text);
  Mat m = r.matrix();
  r.finish();
  return m;
}

FPMod parse_module(const std::string& text) {
  Reader r(text);
  FPMod m = r.module();
  r.finish();
  return m;
}

FPFunctor parse_functor(const std::string& text) {
  Reader r(text);
  FPFunctor f = r.functor();
  r.finish();
  return f;
}

FunHom parse_funhom(const std::string& text) {
  Reader r(text);
  FunHom h = r.funhom_body();
  r.finish();
  return h;
}

}  // namespace freyd
