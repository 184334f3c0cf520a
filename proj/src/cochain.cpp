#include "cohomcat/cochain.hpp"

#include <stdexcept>

#include "cohomcat/parallel.hpp"

namespace cohomcat {

std::string to_string(const Bidegree& d) {
  return "(" + std::to_string(d.n) + "," + std::to_string(d.m) + ")";
}

IndexLayout::IndexLayout(std::size_t order, std::size_t arity) : order_(order), arity_(arity), size_(1) {
  if (arity > kMaxArity) {
    throw std::invalid_argument("cochain arity " + std::to_string(arity) + " exceeds " +
                                std::to_string(kMaxArity));
  }
  for (std::size_t i = arity; i-- > 0;) {
    strides_[i] = size_;
    size_ *= order;
  }
}

std::size_t IndexLayout::encode(std::span<const Element> args) const {
  if (args.size() != arity_) throw std::invalid_argument("argument count does not match arity");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (args[i] >= order_) throw std::out_of_range("element index out of range");
    idx += args[i] * strides_[i];
  }
  return idx;
}

void IndexLayout::decode(std::size_t index, std::span<Element> args) const {
  for (std::size_t i = 0; i < arity_; ++i) {
    args[i] = static_cast<Element>(index / strides_[i]);
    index %= strides_[i];
  }
}

std::vector<Element> IndexLayout::decode(std::size_t index) const {
  std::vector<Element> args(arity_);
  decode(index, args);
  return args;
}

bool IndexLayout::advance(std::span<Element> args) const {
  for (std::size_t i = arity_; i-- > 0;) {
    if (++args[i] < order_) return true;
    args[i] = 0;
  }
  return false;
}

BiCochain::BiCochain(GroupPtr group, Modulus modulus, Bidegree degree)
    : group_(std::move(group)),
      modulus_(modulus),
      degree_(degree),
      layout_(group_ ? group_->order() : 0, degree.arity()) {
  if (!group_) throw std::invalid_argument("cochain needs a group");
  values_.assign(layout_.size(), 0);
}

BiCochain BiCochain::from_values(GroupPtr group, Modulus modulus, Bidegree degree, std::vector<Residue> values) {
  BiCochain c(std::move(group), modulus, degree);
  if (values.size() != c.values_.size()) {
    throw std::invalid_argument("cochain of bidegree " + to_string(degree) + " needs " +
                                std::to_string(c.values_.size()) + " values, got " +
                                std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= modulus.value()) {
      throw std::invalid_argument("cochain value " + std::to_string(values[i]) + " at position " +
                                  std::to_string(i) + " is not a residue mod " + std::to_string(modulus.value()));
    }
  }
  c.values_ = std::move(values);
  return c;
}

bool BiCochain::is_zero() const {
  for (Residue v : values_)
    if (v != 0) return false;
  return true;
}

void BiCochain::require_compatible(const BiCochain& other) const {
  if (!(degree_ == other.degree_) || !(modulus_ == other.modulus_) ||
      (group_ != other.group_ && !(*group_ == *other.group_))) {
    throw std::invalid_argument("cochains differ in group, modulus or bidegree");
  }
}

BiCochain& BiCochain::operator+=(const BiCochain& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = modulus_.add(values_[i], other.values_[i]);
  return *this;
}

BiCochain& BiCochain::operator-=(const BiCochain& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = modulus_.sub(values_[i], other.values_[i]);
  return *this;
}

BiCochain BiCochain::operator-() const {
  BiCochain out(*this);
  for (Residue& v : out.values_) v = modulus_.neg(v);
  return out;
}

bool operator==(const BiCochain& a, const BiCochain& b) {
  if (!(a.degree_ == b.degree_) || !(a.modulus_ == b.modulus_)) return false;
  if (a.group_ != b.group_ && !(*a.group_ == *b.group_)) return false;
  return a.values_ == b.values_;
}

namespace {

// Term generators shared by pointwise evaluation and matrix assembly. Each calls
// emit(source_index, sign) for one summand of (d f)(out).

template <class Emit>
void d2_terms(const FiniteGroup& g, Bidegree src, const IndexLayout& in, std::span<const Element> out,
              Emit&& emit) {
  const std::size_t n = src.n, m = src.m;
  std::array<Element, kMaxArity> a{};
  for (std::size_t i = 0; i < n; ++i) a[i] = out[i];

  // f(g; h2..h_{m+1})
  for (std::size_t j = 0; j < m; ++j) a[n + j] = out[n + 1 + j];
  emit(in.encode_unchecked(a.data()), 1);
  // (-1)^i f(g; .., h_i h_{i+1}, ..)
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) a[n + j] = out[n + j];
    a[n + i] = g.mul(out[n + i], out[n + i + 1]);
    for (std::size_t j = i + 1; j < m; ++j) a[n + j] = out[n + j + 1];
    emit(in.encode_unchecked(a.data()), (i % 2 == 0) ? -1 : 1);
  }
  // (-1)^{m+1} f(g; h1..hm)
  for (std::size_t j = 0; j < m; ++j) a[n + j] = out[n + j];
  emit(in.encode_unchecked(a.data()), (m % 2 == 0) ? -1 : 1);
}

template <class Emit>
void d1_terms(const FiniteGroup& g, Bidegree src, const IndexLayout& in, std::span<const Element> out,
              Emit&& emit) {
  const std::size_t n = src.n, m = src.m;
  std::array<Element, kMaxArity> a{};
  const Element* hats = out.data() + n + 1;

  // f(g2..g_{n+1}; h)
  for (std::size_t j = 0; j < n; ++j) a[j] = out[j + 1];
  for (std::size_t j = 0; j < m; ++j) a[n + j] = hats[j];
  emit(in.encode_unchecked(a.data()), 1);
  // (-1)^i f(.., g_i g_{i+1}, ..; h)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) a[j] = out[j];
    a[i] = g.mul(out[i], out[i + 1]);
    for (std::size_t j = i + 1; j < n; ++j) a[j] = out[j + 1];
    emit(in.encode_unchecked(a.data()), (i % 2 == 0) ? -1 : 1);
  }
  // (-1)^{n+1} f(g1..gn; g_{n+1} h g_{n+1}^-1)
  const Element last = out[n];
  for (std::size_t j = 0; j < n; ++j) a[j] = out[j];
  for (std::size_t j = 0; j < m; ++j) a[n + j] = g.conjugate(last, hats[j]);
  emit(in.encode_unchecked(a.data()), (n % 2 == 0) ? -1 : 1);
}

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

// One summand of a differential evaluated on a whole hatted block: out[h] += sign *
// f[base * block + map[h]], with `map` empty meaning the identity.
struct BlockTerm {
  std::size_t base;
  int sign;
  const std::vector<std::uint32_t>* map;
};

void accumulate_block(const BiCochain& f, std::span<const BlockTerm> terms, std::size_t block,
                      std::span<std::int64_t> acc) {
  std::fill(acc.begin(), acc.end(), 0);
  const auto v = f.values();
  for (const BlockTerm& t : terms) {
    const Residue* src = v.data() + t.base * block;
    if (t.map == nullptr) {
      for (std::size_t h = 0; h < acc.size(); ++h) acc[h] += t.sign * static_cast<std::int64_t>(src[h]);
    } else {
      const std::uint32_t* m = t.map->data();
      for (std::size_t h = 0; h < acc.size(); ++h) acc[h] += t.sign * static_cast<std::int64_t>(src[m[h]]);
    }
  }
}

}  // namespace

BiCochain d2_hatted(const BiCochain& f) {
  const FiniteGroup& g = *f.group();
  const std::size_t o = g.order();
  const auto [n, m] = f.bidegree();
  if (n + m + 1 > kMaxArity) throw std::invalid_argument("arity too large");
  const std::size_t in_block = ipow(o, m), out_block = ipow(o, m + 1), prefixes = ipow(o, n);

  // Index maps from an output hatted tuple (h1..h_{m+1}) to the source hatted tuple.
  std::vector<std::vector<std::uint32_t>> maps(m + 2, std::vector<std::uint32_t>(out_block));
  std::vector<int> signs(m + 2);
  {
    const IndexLayout in(o, m), out(o, m + 1);
    std::array<Element, kMaxArity> h{}, a{};
    std::size_t idx = 0;
    do {
      for (std::size_t j = 0; j < m; ++j) a[j] = h[j + 1];
      maps[0][idx] = static_cast<std::uint32_t>(in.encode_unchecked(a.data()));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < i; ++j) a[j] = h[j];
        a[i] = g.mul(h[i], h[i + 1]);
        for (std::size_t j = i + 1; j < m; ++j) a[j] = h[j + 1];
        maps[i + 1][idx] = static_cast<std::uint32_t>(in.encode_unchecked(a.data()));
      }
      maps[m + 1][idx] = static_cast<std::uint32_t>(in.encode_unchecked(h.data()));
      ++idx;
    } while (out.advance(std::span<Element>(h.data(), m + 1)));
  }
  signs[0] = 1;
  for (std::size_t i = 0; i < m; ++i) signs[i + 1] = (i % 2 == 0) ? -1 : 1;
  signs[m + 1] = (m % 2 == 0) ? -1 : 1;

  const Modulus& mod = f.modulus();
  std::vector<Residue> values(prefixes * out_block, 0);
  parallel_for(prefixes, [&](std::size_t begin, std::size_t end) {
    std::vector<std::int64_t> acc(out_block);
    std::vector<BlockTerm> terms(m + 2);
    for (std::size_t p = begin; p < end; ++p) {
      for (std::size_t t = 0; t < m + 2; ++t) terms[t] = {p, signs[t], &maps[t]};
      accumulate_block(f, terms, in_block, acc);
      for (std::size_t h = 0; h < out_block; ++h) values[p * out_block + h] = mod.reduce(acc[h]);
    }
  });
  return BiCochain::from_values(f.group(), mod, {n, m + 1}, std::move(values));
}

BiCochain d1_twisted(const BiCochain& f) {
  const FiniteGroup& g = *f.group();
  const std::size_t o = g.order();
  const auto [n, m] = f.bidegree();
  if (n + m + 1 > kMaxArity) throw std::invalid_argument("arity too large");
  const std::size_t block = ipow(o, m), prefixes = ipow(o, n + 1);

  // conj[x][h]: index of (x h1 x^-1, .., x hm x^-1).
  std::vector<std::vector<std::uint32_t>> conj(o, std::vector<std::uint32_t>(block));
  {
    const IndexLayout hl(o, m);
    std::array<Element, kMaxArity> h{}, a{};
    std::size_t idx = 0;
    do {
      for (Element x = 0; x < o; ++x) {
        for (std::size_t j = 0; j < m; ++j) a[j] = g.conjugate(x, h[j]);
        conj[x][idx] = static_cast<std::uint32_t>(hl.encode_unchecked(a.data()));
      }
      ++idx;
    } while (hl.advance(std::span<Element>(h.data(), m)));
  }

  const IndexLayout gin(o, n), gout(o, n + 1);
  const Modulus& mod = f.modulus();
  std::vector<Residue> values(prefixes * block, 0);
  parallel_for(prefixes, [&](std::size_t begin, std::size_t end) {
    std::vector<std::int64_t> acc(block);
    std::vector<BlockTerm> terms(n + 2);
    std::array<Element, kMaxArity> x{}, a{};
    gout.decode(begin, std::span<Element>(x.data(), n + 1));
    for (std::size_t p = begin; p < end; ++p) {
      for (std::size_t j = 0; j < n; ++j) a[j] = x[j + 1];
      terms[0] = {gin.encode_unchecked(a.data()), 1, nullptr};
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) a[j] = x[j];
        a[i] = g.mul(x[i], x[i + 1]);
        for (std::size_t j = i + 1; j < n; ++j) a[j] = x[j + 1];
        terms[i + 1] = {gin.encode_unchecked(a.data()), (i % 2 == 0) ? -1 : 1, nullptr};
      }
      terms[n + 1] = {gin.encode_unchecked(x.data()), (n % 2 == 0) ? -1 : 1, &conj[x[n]]};
      accumulate_block(f, terms, block, acc);
      for (std::size_t h = 0; h < block; ++h) values[p * block + h] = mod.reduce(acc[h]);
      gout.advance(std::span<Element>(x.data(), n + 1));
    }
  });
  return BiCochain::from_values(f.group(), mod, {n + 1, m}, std::move(values));
}

namespace {

template <class Terms>
SparseMatrix assemble(const FiniteGroup& g, Bidegree source, Bidegree target, Terms&& terms) {
  const IndexLayout in(g.order(), source.arity()), out(g.order(), target.arity());
  SparseMatrix mat(out.size(), in.size());
  std::array<Element, kMaxArity> args{};
  std::span<Element> view(args.data(), target.arity());
  std::size_t row = 0;
  do {
    std::vector<SparseMatrix::Entry> entries;
    terms(g, in, std::span<const Element>(view), [&](std::size_t src, int sign) {
      entries.emplace_back(static_cast<std::uint32_t>(src), sign);
    });
    mat.set_row(row++, std::move(entries));
  } while (out.advance(view));
  return mat;
}

}  // namespace

SparseMatrix d2_hatted_matrix(const FiniteGroup& group, Bidegree source) {
  return assemble(group, source, {source.n, source.m + 1}, [source](auto& g, auto& in, auto out, auto&& emit) {
    d2_terms(g, source, in, out, emit);
  });
}

SparseMatrix d1_twisted_matrix(const FiniteGroup& group, Bidegree source) {
  return assemble(group, source, {source.n + 1, source.m}, [source](auto& g, auto& in, auto out, auto&& emit) {
    d1_terms(g, source, in, out, emit);
  });
}

TotalCochain TotalCochain::zero(GroupPtr group, Modulus modulus, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("total degree must be at least 1");
  std::vector<BiCochain> comps;
  for (std::size_t n = degree; n >= 1; --n) comps.emplace_back(group, modulus, Bidegree{n, degree + 1 - n});
  return TotalCochain(degree, std::move(comps));
}

TotalCochain TotalCochain::from_components(std::vector<BiCochain> components) {
  if (components.empty()) throw std::invalid_argument("total cochain needs components");
  const std::size_t k = components.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Bidegree want{k - i, i + 1};
    if (!(components[i].bidegree() == want)) {
      throw std::invalid_argument("component " + std::to_string(i) + " has bidegree " +
                                  to_string(components[i].bidegree()) + ", expected " + to_string(want));
    }
    if (!(components[i].modulus() == components[0].modulus()) ||
        !(*components[i].group() == *components[0].group())) {
      throw std::invalid_argument("total cochain components must share group and modulus");
    }
  }
  return TotalCochain(k, std::move(components));
}

const BiCochain& TotalCochain::component(std::size_t n) const {
  if (n < 1 || n > degree_) throw std::out_of_range("no component with that many group arguments");
  return components_[degree_ - n];
}

BiCochain& TotalCochain::component(std::size_t n) {
  if (n < 1 || n > degree_) throw std::out_of_range("no component with that many group arguments");
  return components_[degree_ - n];
}

TotalCochain total_differential(const TotalCochain& x) {
  const BiCochain& first = x.components().front();
  TotalCochain out = TotalCochain::zero(first.group(), first.modulus(), x.degree() + 1);
  for (std::size_t n = 1; n <= x.degree(); ++n) {
    const BiCochain& c = x.component(n);
    out.component(n + 1) += d1_twisted(c);
    BiCochain vertical = d2_hatted(c);
    out.component(n) += (n % 2 == 0) ? vertical : -vertical;
  }
  return out;
}

SparseMatrix total_differential_matrix(const FiniteGroup& group, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("total degree must be at least 1");
  const std::size_t g = group.order();
  auto power = [g](std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= g;
    return r;
  };
  const std::size_t src_block = power(degree + 1), dst_block = power(degree + 2);
  SparseMatrix out(dst_block * (degree + 1), src_block * degree);
  for (std::size_t n = 1; n <= degree; ++n) {
    const Bidegree bd{n, degree + 1 - n};
    const std::size_t col = (degree - n) * src_block;
    out.place((degree - n) * dst_block, col, d1_twisted_matrix(group, bd), 1);
    out.place((degree + 1 - n) * dst_block, col, d2_hatted_matrix(group, bd), n % 2 == 0 ? 1 : -1);
  }
  return out;
}

std::vector<Residue> flatten(const TotalCochain& x) {
  std::vector<Residue> out;
  for (const BiCochain& c : x.components()) out.insert(out.end(), c.values().begin(), c.values().end());
  return out;
}

TotalCochain unflatten(GroupPtr group, Modulus modulus, std::size_t degree, std::span<const Residue> values) {
  TotalCochain zero = TotalCochain::zero(group, modulus, degree);
  std::vector<BiCochain> comps;
  std::size_t offset = 0;
  for (const BiCochain& c : zero.components()) {
    if (offset + c.size() > values.size()) throw std::invalid_argument("too few values for total cochain");
    comps.push_back(BiCochain::from_values(group, modulus, c.bidegree(),
                                           {values.begin() + offset, values.begin() + offset + c.size()}));
    offset += c.size();
  }
  if (offset != values.size()) throw std::invalid_argument("too many values for total cochain");
  return TotalCochain::from_components(std::move(comps));
}

}  // namespace cohomcat
