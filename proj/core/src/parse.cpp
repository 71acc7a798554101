#include "liedeg/parse.hpp"

#include <cctype>
#include <sstream>

namespace liedeg {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : s_(text) {}

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }

  char get() {
    char c = peek();
    ++pos_;
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_blanks() {  // spaces/tabs and comments, not statement separators
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        get();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col_);
  }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

int parse_uint(Cursor& cur, const char* what) {
  cur.skip_blanks();
  if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
    cur.fail(std::string("expected ") + what);
  long v = 0;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    v = v * 10 + (cur.get() - '0');
    if (v > 1000000) cur.fail("number too large");
  }
  return static_cast<int>(v);
}

Rat parse_rat(Cursor& cur) {
  cur.skip_blanks();
  bool neg = false;
  if (cur.peek() == '-') {
    neg = true;
    cur.get();
    cur.skip_blanks();
  }
  long num = parse_uint(cur, "coefficient");
  Rat q(num);
  cur.skip_blanks();
  if (cur.peek() == '/') {
    cur.get();
    long den = parse_uint(cur, "denominator");
    if (den == 0) cur.fail("zero denominator");
    q = Rat(num, den);
    q.canonicalize();
  }
  return neg ? Rat(-q) : q;
}

void expect(Cursor& cur, char c) {
  cur.skip_blanks();
  if (cur.peek() != c) cur.fail(std::string("expected '") + c + "'");
  cur.get();
}

std::string parse_word(Cursor& cur) {
  cur.skip_blanks();
  std::string w;
  while (!cur.eof()) {
    char c = cur.peek();
    if (std::isspace(static_cast<unsigned char>(c)) || c == ';' || c == '#') break;
    w += cur.get();
  }
  return w;
}

}  // namespace

ParsedAlgebra parse_algebra_full(std::string_view text) {
  Cursor cur(text);
  std::string name, family;
  std::optional<int> dim, orbit;
  LieAlgebra::Brackets brackets;

  auto end_statement = [&] {
    cur.skip_blanks();
    if (cur.eof()) return;
    char c = cur.peek();
    if (c == '\n' || c == ';')
      cur.get();
    else
      cur.fail("unexpected trailing input");
  };

  while (true) {
    cur.skip_blanks();
    if (cur.eof()) break;
    char c = cur.peek();
    if (c == '\n' || c == ';') {
      cur.get();
      continue;
    }
    if (c == '[') {
      if (!dim) cur.fail("bracket before 'dim'");
      const int n = *dim;
      cur.get();
      int i = parse_uint(cur, "index");
      expect(cur, ',');
      int j = parse_uint(cur, "index");
      expect(cur, ']');
      if (i < 1 || i > n || j < 1 || j > n) cur.fail("bracket index out of range");
      if (i == j) cur.fail("bracket of a basis vector with itself");
      bool flip = i > j;
      if (flip) std::swap(i, j);
      if (brackets.count({i, j})) cur.fail("duplicate bracket entry");
      expect(cur, '=');
      std::map<int, Scalar> vec;
      bool first = true;
      while (true) {
        cur.skip_blanks();
        Rat sign(1);
        if (!first) {
          char op = cur.peek();
          if (op == '+') {
            cur.get();
          } else if (op == '-') {
            cur.get();
            sign = -1;
          } else {
            break;
          }
        }
        Rat coeff = parse_rat(cur) * sign;
        expect(cur, '*');
        cur.skip_blanks();
        if (cur.peek() != 'e') cur.fail("expected basis symbol 'e<k>'");
        cur.get();
        int k = parse_uint(cur, "basis index");
        if (k < 1 || k > n) cur.fail("basis index out of range");
        if (vec.count(k)) cur.fail("duplicate basis component");
        if (flip) coeff = Rat(-coeff);
        vec.emplace(k, Scalar(coeff));
        first = false;
        cur.skip_blanks();
        if (cur.peek() != '+' && cur.peek() != '-') break;
      }
      if (vec.empty()) cur.fail("empty bracket right-hand side");
      brackets.emplace(std::make_pair(i, j), std::move(vec));
      end_statement();
      continue;
    }
    std::string kw = parse_word(cur);
    if (kw == "name") {
      name = parse_word(cur);
      if (name.empty()) cur.fail("expected algebra name");
    } else if (kw == "dim") {
      if (dim) cur.fail("duplicate 'dim'");
      dim = parse_uint(cur, "dimension");
    } else if (kw == "orbit") {
      orbit = parse_uint(cur, "orbit dimension");
    } else if (kw == "family") {
      cur.skip_blanks();
      std::string rest;
      while (!cur.eof() && cur.peek() != '\n' && cur.peek() != ';' && cur.peek() != '#')
        rest += cur.get();
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
        rest.pop_back();
      family = rest;
    } else {
      cur.fail("unknown statement '" + kw + "'");
    }
    end_statement();
  }
  if (!dim) throw ParseError("missing 'dim'", cur.line(), cur.col());
  return {LieAlgebra(name, *dim, std::move(brackets)), orbit, family};
}

LieAlgebra parse_algebra(std::string_view text) {
  return parse_algebra_full(text).algebra;
}

std::string render(const LieAlgebra& a) {
  std::ostringstream os;
  if (!a.name().empty()) os << "name " << a.name() << "\n";
  os << "dim " << a.dim() << "\n";
  for (const auto& [pair, vec] : a.brackets()) {
    os << "[" << pair.first << "," << pair.second << "] =";
    bool first = true;
    for (const auto& [k, v] : vec) {
      const Rat& q = v.rat();  // catalog constants are rational
      if (first) {
        os << " " << to_string(q);
      } else if (q < 0) {
        os << " - " << to_string(Rat(-q));
      } else {
        os << " + " << to_string(q);
      }
      os << "*e" << k;
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

Mat parse_matrix_rows(const std::vector<std::string>& rows, std::size_t n) {
  if (rows.size() != n) throw std::invalid_argument("matrix row count mismatch");
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    std::istringstream is(rows[r]);
    std::string tok;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(is >> tok)) throw std::invalid_argument("matrix row too short");
      m(r, c) = Scalar(rat_from_string(tok));
    }
    if (is >> tok) throw std::invalid_argument("matrix row too long");
  }
  return m;
}

}  // namespace liedeg
