#include "superlie/catalog.hpp"

#include "superlie/exactla.hpp"

#include <cctype>

namespace superlie {

namespace {

using RMatrix = Matrix<Rational>;

struct MatrixBasis {
  int m = 0, n = 0;  // block sizes of gl(m|n)
  std::vector<RMatrix> mats;
  std::vector<Parity> parity;
};

RMatrix elementary(int size, int a, int b) {
  RMatrix e = RMatrix::Zero(size, size);
  e(a, b) = Rational(1);
  return e;
}

Parity block_parity(int m, int a, int b) { return parity_of((a >= m) + (b >= m)); }

// Structure constants of the span of `basis` under the supercommutator
// [X, Y] = XY - (-1)^{|X||Y|} YX.
SuperAlgebra<Rational> from_matrices(std::string name, const MatrixBasis& basis) {
  const int size = basis.m + basis.n;
  const int dim = static_cast<int>(basis.mats.size());
  const int flat = size * size;
  RMatrix columns(flat, dim);
  for (int c = 0; c < dim; ++c) columns.col(c) = basis.mats[c].reshaped();

  std::vector<StructureConstant<Rational>> cs;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const RMatrix& x = basis.mats[i];
      const RMatrix& y = basis.mats[j];
      RMatrix r = x * y;
      if (sign(basis.parity[i], basis.parity[j]) == 1) r -= y * x;
      else r += y * x;
      RMatrix aug(flat, dim + 1);
      aug << columns, r.reshaped();
      const auto red = rref(aug);
      if (!red.pivots.empty() && red.pivots.back() == dim)
        throw std::logic_error(name + ": matrix basis is not closed under the supercommutator");
      for (Index p = 0; p < red.rank; ++p) {
        const Rational& v = red.reduced(p, dim);
        if (!v.is_zero()) cs.push_back({i, j, static_cast<int>(red.pivots[p]), v});
      }
    }
  return SuperAlgebra<Rational>(std::move(name), FieldDescriptor::rationals(), basis.parity, cs);
}

void add_off_diagonal(MatrixBasis& b, Parity want, bool include_diagonal) {
  const int size = b.m + b.n;
  for (int a = 0; a < size; ++a)
    for (int c = 0; c < size; ++c) {
      if (a == c && !include_diagonal) continue;
      if (block_parity(b.m, a, c) != want) continue;
      b.mats.push_back(elementary(size, a, c));
      b.parity.push_back(want);
    }
}

// ------------------------------------------------------------ key parsing

struct KeyParts {
  std::string head;
  std::vector<std::string> args;
  char separator = 0;
};

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

KeyParts split_key(const std::string& key) {
  const auto open = key.find('(');
  if (open == std::string::npos || key.back() != ')') throw CatalogError("malformed catalog key '" + key + "'");
  KeyParts parts;
  parts.head = key.substr(0, open);
  const std::string inner = key.substr(open + 1, key.size() - open - 2);
  int depth = 0;
  std::string cur;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == ',' || ch == '|')) {
      if (parts.separator && parts.separator != ch) throw CatalogError("malformed catalog key '" + key + "'");
      parts.separator = ch;
      parts.args.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (depth != 0) throw CatalogError("unbalanced parentheses in '" + key + "'");
  parts.args.push_back(cur);
  return parts;
}

int to_int(const std::string& s, const std::string& key) {
  if (s.empty() || s.size() > 3) throw CatalogError("bad integer argument in '" + key + "'");
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw CatalogError("bad integer argument in '" + key + "'");
  return std::stoi(s);
}

}  // namespace

std::string to_string(KnownSimple k) {
  switch (k) {
    case KnownSimple::Yes: return "yes";
    case KnownSimple::No: return "no";
    case KnownSimple::Unknown: return "unknown";
  }
  return "unknown";
}

SuperAlgebra<Rational> make_gl(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) throw CatalogError("gl(m|n) needs m + n >= 1");
  MatrixBasis b{m, n, {}, {}};
  add_off_diagonal(b, Parity::Even, true);
  add_off_diagonal(b, Parity::Odd, true);
  return from_matrices("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", b);
}

SuperAlgebra<Rational> make_sl(int m, int n) {
  if (m < 0 || n < 0 || m + n < 2) throw CatalogError("sl(m|n) needs m + n >= 2");
  const int size = m + n;
  MatrixBasis b{m, n, {}, {}};
  for (int a = 0; a + 1 < size; ++a) {
    RMatrix h = elementary(size, a, a);
    // Supertraceless: across the even/odd boundary the two diagonal entries
    // carry opposite supertrace signs.
    if (a + 1 == m) h(a + 1, a + 1) = Rational(1);
    else h(a + 1, a + 1) = Rational(-1);
    b.mats.push_back(h);
    b.parity.push_back(Parity::Even);
  }
  add_off_diagonal(b, Parity::Even, false);
  add_off_diagonal(b, Parity::Odd, false);
  const std::string name = n == 0 ? "sl(" + std::to_string(m) + ")"
                                  : "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return from_matrices(name, b);
}

SuperAlgebra<Rational> make_osp_1_2() {
  MatrixBasis b{1, 2, {}, {}};
  auto add = [&](RMatrix x, Parity p) {
    b.mats.push_back(std::move(x));
    b.parity.push_back(p);
  };
  add(elementary(3, 1, 1) - elementary(3, 2, 2), Parity::Even);  // h
  add(elementary(3, 1, 2), Parity::Even);                        // e
  add(elementary(3, 2, 1), Parity::Even);                        // f
  add(elementary(3, 1, 0) + elementary(3, 0, 2), Parity::Odd);   // u
  add(elementary(3, 2, 0) - elementary(3, 0, 1), Parity::Odd);   // v
  return from_matrices("osp(1|2)", b);
}

SuperAlgebra<Rational> make_heisenberg(int q) {
  if (q < 1) throw CatalogError("heis(q) needs q >= 1");
  std::vector<Parity> parity(q + 1, Parity::Odd);
  parity[0] = Parity::Even;
  std::vector<StructureConstant<Rational>> cs;
  for (int i = 1; i <= q; ++i) cs.push_back({i, i, 0, Rational(1)});
  return SuperAlgebra<Rational>("heis(" + std::to_string(q) + ")", FieldDescriptor::rationals(), parity, cs);
}

SuperAlgebra<Rational> make_abelian(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw CatalogError("abelian(p,q) needs p + q >= 1");
  std::vector<Parity> parity(p, Parity::Even);
  parity.resize(p + q, Parity::Odd);
  return SuperAlgebra<Rational>("abelian(" + std::to_string(p) + "," + std::to_string(q) + ")",
                                FieldDescriptor::rationals(), parity, {});
}

CatalogEntry catalog_entry(std::string_view raw) {
  const std::string key = strip(raw);
  const KeyParts parts = split_key(key);
  const auto& args = parts.args;
  auto ints = [&](std::size_t count, char sep) {
    if (args.size() != count || (count > 1 && parts.separator != sep)) throw CatalogError("bad arguments in '" + key + "'");
    std::vector<int> out;
    for (const auto& a : args) out.push_back(to_int(a, key));
    return out;
  };

  if (parts.head == "sl") {
    const auto v = args.size() == 1 ? std::vector<int>{to_int(args[0], key), 0} : ints(2, '|');
    auto alg = make_sl(v[0], v[1]);
    if (v[0] != v[1]) return {key, KnownSimple::Yes, std::nullopt, std::move(alg)};
    return {key, KnownSimple::No, 1, std::move(alg)};
  }
  if (parts.head == "gl") {
    const auto v = ints(2, '|');
    auto alg = make_gl(v[0], v[1]);
    return {key, KnownSimple::No, alg.dim() == 1 ? 0 : 1, std::move(alg)};
  }
  if (parts.head == "osp") {
    const auto v = ints(2, '|');
    if (v[0] != 1 || v[1] != 2) throw CatalogError("only osp(1|2) is in the catalog");
    return {key, KnownSimple::Yes, std::nullopt, make_osp_1_2()};
  }
  if (parts.head == "heis") {
    const auto v = ints(1, 0);
    return {key, KnownSimple::No, 1, make_heisenberg(v[0])};
  }
  if (parts.head == "abelian") {
    const auto v = ints(2, ',');
    auto alg = make_abelian(v[0], v[1]);
    return {key, KnownSimple::No, alg.dim() == 1 ? 0 : 1, std::move(alg)};
  }
  if (parts.head == "sum") {
    if (args.size() != 2 || parts.separator != ',') throw CatalogError("sum needs two keys in '" + key + "'");
    auto a = catalog_entry(args[0]);
    auto b = catalog_entry(args[1]);
    return {key, KnownSimple::No, std::nullopt, direct_sum(a.algebra, b.algebra)};
  }
  throw CatalogError("unknown catalog key '" + key + "'");
}

std::vector<std::string> catalog_keys() {
  return {"sl(2)",   "sl(1|1)",  "sl(2|1)",      "sl(3|1)",      "gl(1|1)",          "gl(2|1)",
          "osp(1|2)", "heis(1)", "heis(2)",      "abelian(1,1)", "abelian(2,1)",     "sum(sl(2),sl(2))",
          "sum(sl(1|1),heis(1))"};
}

}  // namespace superlie
