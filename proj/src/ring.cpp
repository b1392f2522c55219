#include "ringrange/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <numeric>

namespace ringrange {

namespace {

std::atomic<RingTag> next_tag{1};

constexpr std::uint16_t kNoQuotient = 0xFFFF;

}  // namespace

// A Z_n or Z_n[x]/(f) factor. Modular factors are the degree-1 case with
// modulus x, which keeps one arithmetic path for both.
struct Ring::Leaf {
  std::uint32_t n = 0;
  std::uint32_t degree = 1;
  std::vector<std::uint32_t> modulus;
  bool poly = false;
  std::uint64_t order = 0;

  std::vector<std::uint32_t> digits(std::uint64_t code) const {
    std::vector<std::uint32_t> out(degree);
    for (auto& d : out) {
      d = static_cast<std::uint32_t>(code % n);
      code /= n;
    }
    return out;
  }

  std::uint64_t encode(const std::vector<std::uint32_t>& c) const {
    std::uint64_t code = 0;
    for (std::size_t i = degree; i-- > 0;) code = code * n + c[i];
    return code;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = digits(a);
    auto y = digits(b);
    for (std::size_t i = 0; i < degree; ++i) x[i] = (x[i] + y[i]) % n;
    return encode(x);
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    auto x = digits(a);
    auto y = digits(b);
    std::vector<std::uint64_t> prod(2 * degree - 1, 0);
    for (std::size_t i = 0; i < degree; ++i) {
      for (std::size_t j = 0; j < degree; ++j) {
        prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % n;
      }
    }
    // Reduce by the monic modulus from the top down.
    for (std::size_t k = prod.size(); k-- > degree;) {
      auto c = prod[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= degree; ++i) {
        auto sub = c * modulus[i] % n;
        prod[k - degree + i] = (prod[k - degree + i] + n - sub) % n;
      }
    }
    std::vector<std::uint32_t> out(degree);
    for (std::size_t i = 0; i < degree; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(out);
  }

  std::string format(std::uint64_t code) const {
    if (!poly) return std::to_string(code);
    auto c = digits(code);
    std::string out;
    for (std::size_t k = 0; k < degree; ++k) {
      if (c[k] == 0) continue;
      if (!out.empty()) out += "+";
      if (k == 0) {
        out += std::to_string(c[k]);
        continue;
      }
      if (c[k] != 1) out += std::to_string(c[k]);
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

  // Integers (possibly negative) for Z_n; sums of signed c x^k for polynomials.
  std::uint64_t parse(std::string_view text) const {
    std::vector<std::uint64_t> c(degree, 0);
    std::size_t pos = 0;
    auto fail = [&] { throw RingError("cannot parse element '" + std::string(text) + "'"); };
    auto number = [&] {
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = (v * 10 + static_cast<std::uint64_t>(text[pos] - '0')) % n;
        ++pos;
      }
      return v;
    };
    if (text.empty()) fail();
    bool first = true;
    while (pos < text.size()) {
      bool negative = false;
      if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
      } else if (!first) {
        fail();
      }
      first = false;
      std::uint64_t coeff = 1;
      bool has_coeff = false;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = number();
        has_coeff = true;
        if (pos < text.size() && text[pos] == '*') ++pos;
      }
      std::uint64_t k = 0;
      if (pos < text.size() && text[pos] == 'x') {
        if (!poly) fail();
        ++pos;
        k = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
          k = 0;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            k = k * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (k > 64) fail();
            ++pos;
          }
        }
      } else if (!has_coeff) {
        fail();
      }
      if (negative) coeff = (n - coeff % n) % n;
      // Reduce x^k with k >= degree by repeated multiplication by x.
      std::vector<std::uint32_t> term(degree, 0);
      if (k < degree) {
        term[k] = static_cast<std::uint32_t>(coeff);
      } else {
        term[0] = static_cast<std::uint32_t>(coeff);
        std::vector<std::uint32_t> xs(degree, 0);
        if (degree > 1) {
          xs[1] = 1;
        } else {
          xs[0] = (n - modulus[0]) % n;
        }
        auto t = encode(term);
        auto xcode = encode(xs);
        for (std::uint64_t i = 0; i < k; ++i) t = mul(t, xcode);
        term = digits(t);
      }
      for (std::size_t i = 0; i < degree; ++i) c[i] = (c[i] + term[i]) % n;
    }
    std::vector<std::uint32_t> out(degree);
    for (std::size_t i = 0; i < degree; ++i) out[i] = static_cast<std::uint32_t>(c[i]);
    return encode(out);
  }
};

struct Ring::Caches {
  std::once_flag units_once, idempotents_once, regulars_once, multiples_once, annihilators_once,
      divide_once, comaximal_once, principal_once;
  Subset units, idempotents, regulars;
  std::vector<Code> inverse;
  std::vector<Subset> multiples;
  std::vector<Subset> annihilators;
  std::vector<std::uint16_t> quotient;
  std::vector<std::uint8_t> comaximal;
  std::unordered_map<std::vector<bool>, Code> principal;
};

namespace {

Subset subset_from_mask(std::vector<bool> mask) {
  Subset s;
  for (Code c = 0; c < mask.size(); ++c) {
    if (mask[c]) s.members.push_back(c);
  }
  s.mask = std::move(mask);
  return s;
}

void collect_leaves(const RingSpec& spec, auto& out, auto make_leaf) {
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, RingSpec::Product>) {
          for (const auto& f : t.factors) collect_leaves(f, out, make_leaf);
        } else {
          out.push_back(make_leaf(t));
        }
      },
      spec.term);
}

}  // namespace

Ring::Ring() : caches_(std::make_unique<Caches>()) {}
Ring::~Ring() = default;

Ring::Ptr Ring::realize(std::string_view spec_text) { return realize(RingSpec::parse(spec_text)); }

Ring::Ptr Ring::realize(const RingSpec& spec) {
  spec.validate();
  std::shared_ptr<Ring> ring(new Ring());
  ring->tag_ = next_tag.fetch_add(1);
  ring->spec_ = spec;
  ring->label_ = spec.to_string();

  collect_leaves(spec, ring->leaves_, [](const auto& t) {
    Leaf leaf;
    using T = std::decay_t<decltype(t)>;
    leaf.n = t.n;
    if constexpr (std::is_same_v<T, RingSpec::PolyQuotient>) {
      leaf.degree = static_cast<std::uint32_t>(t.modulus.size() - 1);
      leaf.modulus = t.modulus;
      leaf.poly = true;
    } else {
      leaf.degree = 1;
      leaf.modulus = {0, 1};
    }
    leaf.order = 1;
    for (std::uint32_t i = 0; i < leaf.degree; ++i) leaf.order *= leaf.n;
    return leaf;
  });

  const auto& leaves = ring->leaves_;
  std::size_t n = 1;
  for (const auto& leaf : leaves) n *= leaf.order;
  ring->n_ = n;

  // Leaf digit extraction: the first leaf is most significant.
  std::vector<std::uint64_t> stride(leaves.size(), 1);
  for (std::size_t i = leaves.size(); i-- > 1;) stride[i - 1] = stride[i] * leaves[i].order;
  auto split = [&](Code c) {
    std::vector<std::uint64_t> parts(leaves.size());
    for (std::size_t i = 0; i < leaves.size(); ++i) parts[i] = (c / stride[i]) % leaves[i].order;
    return parts;
  };
  auto join = [&](const std::vector<std::uint64_t>& parts) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < leaves.size(); ++i) c += parts[i] * stride[i];
    return static_cast<Code>(c);
  };

  std::vector<std::vector<std::uint64_t>> decoded(n);
  for (Code c = 0; c < n; ++c) decoded[c] = split(c);

  ring->add_.resize(n * n);
  ring->mul_.resize(n * n);
  std::vector<std::uint64_t> sum(leaves.size()), prod(leaves.size());
  for (Code a = 0; a < n; ++a) {
    for (Code b = a; b < n; ++b) {
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        sum[i] = leaves[i].add(decoded[a][i], decoded[b][i]);
        prod[i] = leaves[i].mul(decoded[a][i], decoded[b][i]);
      }
      auto s = join(sum);
      auto p = join(prod);
      ring->add_[ring->index(a, b)] = ring->add_[ring->index(b, a)] = s;
      ring->mul_[ring->index(a, b)] = ring->mul_[ring->index(b, a)] = p;
    }
  }

  std::vector<std::uint64_t> one_parts(leaves.size(), 1);
  ring->zero_ = 0;
  ring->one_ = join(one_parts);

  ring->neg_.resize(n);
  for (Code a = 0; a < n; ++a) {
    for (Code b = 0; b < n; ++b) {
      if (ring->add(a, b) == ring->zero_) {
        ring->neg_[a] = b;
        break;
      }
    }
  }

  ring->names_.resize(n);
  for (Code c = 0; c < n; ++c) {
    if (leaves.size() == 1) {
      ring->names_[c] = leaves[0].format(decoded[c][0]);
      continue;
    }
    std::string name = "(";
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (i) name += ",";
      name += leaves[i].format(decoded[c][i]);
    }
    ring->names_[c] = name + ")";
  }
  return ring;
}

Ring::Ptr Ring::from_tables(std::string label, std::size_t order, std::vector<Code> add,
                            std::vector<Code> mul, Code zero, Code one,
                            std::vector<std::string> names) {
  if (order < 2) throw RingError("a ring needs 1 != 0, so at least two elements");
  if (order > kMaxRealizableOrder) throw RingError("table ring exceeds the realization limit");
  if (add.size() != order * order || mul.size() != order * order || names.size() != order) {
    throw RingError("table sizes do not match the ring order");
  }
  std::shared_ptr<Ring> ring(new Ring());
  ring->tag_ = next_tag.fetch_add(1);
  ring->label_ = std::move(label);
  ring->n_ = order;
  ring->add_ = std::move(add);
  ring->mul_ = std::move(mul);
  ring->zero_ = zero;
  ring->one_ = one;
  ring->names_ = std::move(names);
  ring->neg_.assign(order, 0);
  for (Code a = 0; a < order; ++a) {
    for (Code b = 0; b < order; ++b) {
      if (ring->add(a, b) == zero) {
        ring->neg_[a] = b;
        break;
      }
    }
  }
  return ring;
}

Element Ring::element(Code code) const {
  if (code >= n_) throw RingError("code " + std::to_string(code) + " out of range for " + label_);
  return {tag_, code};
}

std::vector<Element> Ring::elements() const {
  std::vector<Element> out(n_);
  for (Code c = 0; c < n_; ++c) out[c] = {tag_, c};
  return out;
}

std::vector<Element> Ring::to_elements(std::span<const Code> codes) const {
  std::vector<Element> out;
  out.reserve(codes.size());
  for (auto c : codes) out.push_back(element(c));
  return out;
}

Code Ring::code_of(Element e) const {
  if (e.ring != tag_) throw MixedRingError("element does not belong to ring " + label_);
  if (e.code >= n_) throw RingError("element code out of range for " + label_);
  return e.code;
}

Element Ring::add(Element a, Element b) const { return {tag_, add(code_of(a), code_of(b))}; }
Element Ring::sub(Element a, Element b) const { return {tag_, sub(code_of(a), code_of(b))}; }
Element Ring::mul(Element a, Element b) const { return {tag_, mul(code_of(a), code_of(b))}; }
Element Ring::neg(Element a) const { return {tag_, neg(code_of(a))}; }

Element Ring::parse_element(std::string_view text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (leaves_.empty()) {
    // Table-built rings: look the printed name up.
    for (Code c = 0; c < n_; ++c) {
      if (names_[c] == s) return {tag_, c};
    }
    throw RingError("no element named '" + s + "' in " + label_);
  }
  if (leaves_.size() == 1) return element(static_cast<Code>(leaves_[0].parse(s)));
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw RingError("product elements are written (a,b,...), got '" + s + "'");
  }
  std::vector<std::string> parts(1);
  for (char c : std::string_view(s).substr(1, s.size() - 2)) {
    if (c == ',') {
      parts.emplace_back();
    } else {
      parts.back().push_back(c);
    }
  }
  if (parts.size() != leaves_.size()) {
    throw RingError("expected " + std::to_string(leaves_.size()) + " components in '" + s + "'");
  }
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    code = code * leaves_[i].order + leaves_[i].parse(parts[i]);
  }
  return element(static_cast<Code>(code));
}

const Subset& Ring::units() const {
  std::call_once(caches_->units_once, [&] {
    std::vector<bool> mask(n_, false);
    caches_->inverse.assign(n_, 0);
    for (Code a = 0; a < n_; ++a) {
      for (Code b = 0; b < n_; ++b) {
        if (mul(a, b) == one_) {
          mask[a] = true;
          caches_->inverse[a] = b;
          break;
        }
      }
    }
    caches_->units = subset_from_mask(std::move(mask));
  });
  return caches_->units;
}

Code Ring::inverse(Code c) const {
  if (!units().contains(c)) throw RingError(format(c) + " is not a unit of " + label_);
  return caches_->inverse[c];
}

const Subset& Ring::idempotents() const {
  std::call_once(caches_->idempotents_once, [&] {
    std::vector<bool> mask(n_, false);
    for (Code a = 0; a < n_; ++a) mask[a] = mul(a, a) == a;
    caches_->idempotents = subset_from_mask(std::move(mask));
  });
  return caches_->idempotents;
}

const Subset& Ring::regulars() const {
  std::call_once(caches_->regulars_once, [&] {
    std::vector<bool> mask(n_, false);
    for (Code a = 0; a < n_; ++a) {
      if (a == zero_) continue;
      bool zero_divisor = false;
      for (Code b = 0; b < n_ && !zero_divisor; ++b) {
        zero_divisor = b != zero_ && mul(a, b) == zero_;
      }
      mask[a] = !zero_divisor;
    }
    caches_->regulars = subset_from_mask(std::move(mask));
  });
  return caches_->regulars;
}

const Subset& Ring::multiples(Code a) const {
  std::call_once(caches_->multiples_once, [&] {
    caches_->multiples.resize(n_);
    for (Code x = 0; x < n_; ++x) {
      std::vector<bool> mask(n_, false);
      for (Code r = 0; r < n_; ++r) mask[mul(x, r)] = true;
      caches_->multiples[x] = subset_from_mask(std::move(mask));
    }
  });
  return caches_->multiples.at(a);
}

const Subset& Ring::annihilator_of(Code a) const {
  std::call_once(caches_->annihilators_once, [&] {
    caches_->annihilators.resize(n_);
    for (Code x = 0; x < n_; ++x) {
      std::vector<bool> mask(n_, false);
      for (Code r = 0; r < n_; ++r) mask[r] = mul(x, r) == zero_;
      caches_->annihilators[x] = subset_from_mask(std::move(mask));
    }
  });
  return caches_->annihilators.at(a);
}

std::optional<Code> Ring::divide(Code d, Code target) const {
  std::call_once(caches_->divide_once, [&] {
    caches_->quotient.assign(n_ * n_, kNoQuotient);
    for (Code x = 0; x < n_; ++x) {
      for (Code q = static_cast<Code>(n_); q-- > 0;) {
        caches_->quotient[index(x, mul(x, q))] = static_cast<std::uint16_t>(q);
      }
    }
  });
  auto q = caches_->quotient[index(d, target)];
  if (q == kNoQuotient) return std::nullopt;
  return q;
}

bool Ring::comaximal(Code a, Code b) const {
  std::call_once(caches_->comaximal_once, [&] {
    caches_->comaximal.assign(n_ * n_, 0);
    for (Code x = 0; x < n_; ++x) {
      const auto& xr = multiples(x);
      for (Code y = x; y < n_; ++y) {
        const auto& yr = multiples(y);
        bool hit = false;
        for (Code m : xr.members) {
          if (yr.contains(sub(one_, m))) {
            hit = true;
            break;
          }
        }
        caches_->comaximal[index(x, y)] = caches_->comaximal[index(y, x)] = hit ? 1 : 0;
      }
    }
  });
  return caches_->comaximal[index(a, b)] != 0;
}

std::optional<Code> Ring::principal_generator(const std::vector<bool>& mask) const {
  std::call_once(caches_->principal_once, [&] {
    for (Code d = 0; d < n_; ++d) caches_->principal.try_emplace(multiples(d).mask, d);
  });
  auto it = caches_->principal.find(mask);
  if (it == caches_->principal.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<Ring::MemoSlot> Ring::memo_slot(std::type_index key) const {
  std::lock_guard lock(memo_mutex_);
  auto& slot = memo_[key];
  if (!slot) slot = std::make_shared<MemoSlot>();
  return slot;
}

std::optional<std::string> check_ring_axioms(const Ring& r) {
  const auto n = static_cast<Code>(r.order());
  if (r.zero_code() == r.one_code()) return "1 == 0";
  for (Code a = 0; a < n; ++a) {
    if (r.add(a, r.zero_code()) != a) return "0 is not an additive identity for " + r.format(a);
    if (r.mul(a, r.one_code()) != a) return "1 is not a multiplicative identity for " + r.format(a);
    if (r.add(a, r.neg(a)) != r.zero_code()) return "no additive inverse for " + r.format(a);
    for (Code b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return "addition not commutative";
      if (r.mul(a, b) != r.mul(b, a)) return "multiplication not commutative";
      for (Code c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "addition not associative";
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
          return "multiplication not associative";
        }
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
          return "multiplication does not distribute over addition";
        }
      }
    }
  }
  return std::nullopt;
}

SpecialSubsets special_subsets(const Ring& ring) {
  return {ring.to_elements(ring.units().members), ring.to_elements(ring.idempotents().members),
          ring.to_elements(ring.regulars().members)};
}

}  // namespace ringrange
