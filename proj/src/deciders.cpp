#include <algorithm>
#include <array>
#include <cctype>

#include "ringrange/element_class.hpp"
#include "ringrange/ideal.hpp"
#include "ringrange/properties.hpp"

namespace ringrange {

namespace {

using Clock = std::chrono::steady_clock;

struct PropertyInfo {
  PropertyId id;
  std::string_view name;
  std::string_view statement;
};

constexpr std::array<PropertyInfo, kAllProperties.size()> kInfo = {{
    {PropertyId::StableRange1, "SR1",
     "aR + bR = R implies (a + bt)R = R for some t"},
    {PropertyId::StableRange2, "SR2",
     "aR + bR + cR = R implies (a + cx)R + (b + cy)R = R for some x, y"},
    {PropertyId::VnrRange1, "VNR_RANGE1",
     "aR + bR = R implies a + by is von Neumann regular for some y"},
    {PropertyId::ShRange1, "SH_RANGE1",
     "aR + bR = R implies a + by is semihereditary for some y"},
    {PropertyId::RegularRange1, "REG_RANGE1",
     "aR + bR = R implies a + by is regular for some y"},
    {PropertyId::IdempotentRegularRange1, "IDEM_REG_RANGE1",
     "aR + bR = R implies a + be is regular for some idempotent e"},
    {PropertyId::RegularLocal, "REG_LOCAL", "for every a, a or 1 - a is regular"},
    {PropertyId::VnrLocal, "VNR_LOCAL", "for every a, a or 1 - a is von Neumann regular"},
    {PropertyId::ShLocal, "SH_LOCAL", "aR + bR = R implies a or b is semihereditary"},
    {PropertyId::Clean, "CLEAN", "every element is an idempotent plus a unit"},
    {PropertyId::AlmostClean, "ALMOST_CLEAN",
     "every element is an idempotent plus a regular element"},
    {PropertyId::PpElementwise, "PP_ELEMENTWISE",
     "every element is e r with e idempotent and r regular"},
    {PropertyId::Bezout, "BEZOUT", "every two-generated ideal is principal"},
    {PropertyId::Hermite, "HERMITE",
     "every 1x2 and 2x1 matrix is equivalent to a diagonal matrix"},
    {PropertyId::AdditivelyRegular, "ADD_REGULAR",
     "for every a and regular b, a + ub is regular for some u"},
    {PropertyId::Indecomposable, "INDECOMPOSABLE", "the only idempotents are 0 and 1"},
    {PropertyId::Local, "LOCAL", "the non-units are closed under addition"},
}};

const PropertyInfo& info(PropertyId id) { return kInfo[static_cast<std::size_t>(id)]; }

class Search {
 public:
  Search(const Ring& r, const DecideOptions& opt)
      : r_(r), opt_(opt), n_(static_cast<Code>(r.order())) {}

  const Ring& ring() const { return r_; }
  Code n() const { return n_; }

  void tick() const {
    if (opt_.deadline && Clock::now() > *opt_.deadline) {
      throw DeadlineExceeded("deadline exceeded while deciding over " + r_.label());
    }
  }

  Witness bind(std::initializer_list<std::pair<const char*, Code>> items) const {
    Witness w;
    for (auto [name, c] : items) w.bindings.emplace_back(name, r_.element(c));
    return w;
  }

 private:
  const Ring& r_;
  const DecideOptions& opt_;
  Code n_;
};

// Keeps the first sampled instance, preferring one whose witness is not the
// trivial choice.
class Sampler {
 public:
  void offer(bool nontrivial, const std::function<Witness()>& make) {
    if (nontrivial_) return;
    if (nontrivial) {
      sample_ = make();
      nontrivial_ = true;
    } else if (!sample_) {
      sample_ = make();
    }
  }
  std::optional<Witness> take() { return std::move(sample_); }

 private:
  std::optional<Witness> sample_;
  bool nontrivial_ = false;
};

enum class Target { Unit, Regular, Vnr, Semihereditary };

bool satisfies(const Ring& r, Target target, Code c) {
  switch (target) {
    case Target::Unit:
      return r.is_unit(c);
    case Target::Regular:
      return r.is_regular(c);
    case Target::Vnr:
      return class_of(r, c).is_vnr;
    case Target::Semihereditary:
      return class_of(r, c).is_semihereditary;
  }
  return false;
}

struct RangeOneShape {
  Target target;
  bool idempotent_multipliers;
  const char* multiplier;
};

std::optional<RangeOneShape> range_one_shape(PropertyId id) {
  switch (id) {
    case PropertyId::StableRange1:
      return RangeOneShape{Target::Unit, false, "t"};
    case PropertyId::VnrRange1:
      return RangeOneShape{Target::Vnr, false, "y"};
    case PropertyId::ShRange1:
      return RangeOneShape{Target::Semihereditary, false, "y"};
    case PropertyId::RegularRange1:
      return RangeOneShape{Target::Regular, false, "y"};
    case PropertyId::IdempotentRegularRange1:
      return RangeOneShape{Target::Regular, true, "e"};
    default:
      return std::nullopt;
  }
}

// First multiplier y (ascending) with a + b y in the target class.
std::optional<Code> range_one_multiplier(const Ring& r, const RangeOneShape& shape, Code a,
                                         Code b) {
  auto try_y = [&](Code y) { return satisfies(r, shape.target, r.add(a, r.mul(b, y))); };
  if (shape.idempotent_multipliers) {
    for (Code e : r.idempotents().members) {
      if (try_y(e)) return e;
    }
    return std::nullopt;
  }
  for (Code y = 0; y < r.order(); ++y) {
    if (try_y(y)) return y;
  }
  return std::nullopt;
}

Verdict decide_range_one(const Search& s, PropertyId id, const RangeOneShape& shape) {
  const Ring& r = s.ring();
  Sampler sampler;
  for (Code a = 0; a < s.n(); ++a) {
    s.tick();
    for (Code b = 0; b < s.n(); ++b) {
      if (!r.comaximal(a, b)) continue;
      auto y = range_one_multiplier(r, shape, a, b);
      if (!y) return {id, false, s.bind({{"a", a}, {"b", b}})};
      sampler.offer(*y != r.zero_code(),
                    [&] { return s.bind({{"a", a}, {"b", b}, {shape.multiplier, *y}}); });
    }
  }
  return {id, true, sampler.take()};
}

bool triple_unimodular(const Ring& r, const std::vector<bool>& ab_sum, Code c) {
  for (Code z : r.multiples(c).members) {
    if (ab_sum[r.sub(r.one_code(), z)]) return true;
  }
  return false;
}

std::optional<std::pair<Code, Code>> sr2_shift(const Ring& r, Code a, Code b, Code c) {
  const auto n = static_cast<Code>(r.order());
  for (Code x = 0; x < n; ++x) {
    const Code ax = r.add(a, r.mul(c, x));
    for (Code y = 0; y < n; ++y) {
      if (r.comaximal(ax, r.add(b, r.mul(c, y)))) return std::pair{x, y};
    }
  }
  return std::nullopt;
}

Verdict decide_sr2(const Search& s, const DecideOptions& opt) {
  const Ring& r = s.ring();
  if (r.order() > opt.sr2_cap) {
    throw CapExceeded("SR2 search over " + r.label() + " exceeds the order cap " +
                      std::to_string(opt.sr2_cap));
  }
  Sampler sampler;
  for (Code a = 0; a < s.n(); ++a) {
    for (Code b = 0; b < s.n(); ++b) {
      s.tick();
      const auto ab = sum_mask(r, r.multiples(a).mask, r.multiples(b).mask);
      for (Code c = 0; c < s.n(); ++c) {
        if (!triple_unimodular(r, ab, c)) continue;
        auto shift = r.comaximal(a, b) ? std::optional{std::pair<Code, Code>{0, 0}}
                                       : sr2_shift(r, a, b, c);
        if (!shift) return {PropertyId::StableRange2, false, s.bind({{"a", a}, {"b", b}, {"c", c}})};
        sampler.offer(shift->first != 0 || shift->second != 0, [&] {
          return s.bind({{"a", a}, {"b", b}, {"c", c}, {"x", shift->first}, {"y", shift->second}});
        });
      }
    }
  }
  return {PropertyId::StableRange2, true, sampler.take()};
}

Verdict decide_local_kind(const Search& s, PropertyId id, Target target) {
  const Ring& r = s.ring();
  Sampler sampler;
  for (Code a = 0; a < s.n(); ++a) {
    const Code complement = r.sub(r.one_code(), a);
    const bool direct = satisfies(r, target, a);
    if (!direct && !satisfies(r, target, complement)) return {id, false, s.bind({{"a", a}})};
    sampler.offer(!direct, [&] { return s.bind({{"a", a}, {"1-a", complement}}); });
  }
  return {id, true, sampler.take()};
}

Verdict decide_sh_local(const Search& s) {
  const Ring& r = s.ring();
  Sampler sampler;
  for (Code a = 0; a < s.n(); ++a) {
    s.tick();
    const bool a_sh = class_of(r, a).is_semihereditary;
    for (Code b = 0; b < s.n(); ++b) {
      if (!r.comaximal(a, b)) continue;
      if (!a_sh && !class_of(r, b).is_semihereditary) {
        return {PropertyId::ShLocal, false, s.bind({{"a", a}, {"b", b}})};
      }
      sampler.offer(!a_sh, [&] { return s.bind({{"a", a}, {"b", b}}); });
    }
  }
  return {PropertyId::ShLocal, true, sampler.take()};
}

Verdict decide_sum_decomposition(const Search& s, PropertyId id, Target target,
                                 const char* part) {
  const Ring& r = s.ring();
  Sampler sampler;
  for (Code a = 0; a < s.n(); ++a) {
    std::optional<Code> found;
    for (Code e : r.idempotents().members) {
      if (satisfies(r, target, r.sub(a, e))) {
        found = e;
        break;
      }
    }
    if (!found) return {id, false, s.bind({{"a", a}})};
    sampler.offer(*found != r.zero_code(),
                  [&] { return s.bind({{"a", a}, {"e", *found}, {part, r.sub(a, *found)}}); });
  }
  return {id, true, sampler.take()};
}

Verdict decide_pp(const Search& s) {
  const Ring& r = s.ring();
  Sampler sampler;
  for (Code a = 0; a < s.n(); ++a) {
    const auto& k = class_of(r, a);
    if (!k.is_semihereditary) return {PropertyId::PpElementwise, false, s.bind({{"a", a}})};
    const Code phi = k.sh_witness->code;
    const Code e = r.sub(r.one_code(), phi);
    sampler.offer(e != r.one_code() && a != r.zero_code(), [&] {
      return s.bind({{"a", a}, {"e", e}, {"r", r.sub(a, phi)}});
    });
  }
  return {PropertyId::PpElementwise, true, sampler.take()};
}

Verdict decide_bezout(const Search& s) {
  const Ring& r = s.ring();
  Sampler sampler;
  for (Code a = 0; a < s.n(); ++a) {
    s.tick();
    for (Code b = a; b < s.n(); ++b) {
      const auto& ar = r.multiples(a);
      const auto& br = r.multiples(b);
      if (ar.contains(b) || br.contains(a)) continue;
      auto d = r.principal_generator(sum_mask(r, ar.mask, br.mask));
      if (!d) return {PropertyId::Bezout, false, s.bind({{"a", a}, {"b", b}})};
      sampler.offer(true, [&] { return s.bind({{"a", a}, {"b", b}, {"d", *d}}); });
    }
  }
  // Every pair where one generator divides the other is trivially principal.
  sampler.offer(false, [&] { return s.bind({{"a", 0}, {"b", 0}, {"d", 0}}); });
  return {PropertyId::Bezout, true, sampler.take()};
}

std::optional<std::array<Code, 3>> hermite_factor(const Ring& r, Code a, Code b) {
  const auto n = static_cast<Code>(r.order());
  std::vector<Code> left, right;
  for (Code d = 0; d < n; ++d) {
    auto q = r.divide(d, a);
    if (!q) continue;
    auto p = r.divide(d, b);
    if (!p) continue;
    // Solutions of d*a1 = a form the coset q + ann(d).
    left.clear();
    right.clear();
    for (Code k : r.annihilator_of(d).members) {
      left.push_back(r.add(*q, k));
      right.push_back(r.add(*p, k));
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    for (Code a1 : left) {
      for (Code b1 : right) {
        if (r.comaximal(a1, b1)) return std::array<Code, 3>{d, a1, b1};
      }
    }
  }
  return std::nullopt;
}

std::optional<Code> additive_shift(const Ring& r, Code a, Code b) {
  for (Code u = 0; u < r.order(); ++u) {
    if (r.is_regular(r.add(a, r.mul(u, b)))) return u;
  }
  return std::nullopt;
}

Verdict decide_additively_regular(const Search& s) {
  const Ring& r = s.ring();
  Sampler sampler;
  for (Code a = 0; a < s.n(); ++a) {
    s.tick();
    for (Code b : r.regulars().members) {
      auto u = additive_shift(r, a, b);
      if (!u) return {PropertyId::AdditivelyRegular, false, s.bind({{"a", a}, {"b", b}})};
      sampler.offer(*u != r.zero_code(),
                    [&] { return s.bind({{"a", a}, {"b", b}, {"u", *u}}); });
    }
  }
  return {PropertyId::AdditivelyRegular, true, sampler.take()};
}

Verdict decide_indecomposable(const Search& s) {
  const Ring& r = s.ring();
  for (Code e : r.idempotents().members) {
    if (e != r.zero_code() && e != r.one_code()) {
      return {PropertyId::Indecomposable, false, s.bind({{"e", e}})};
    }
  }
  return {PropertyId::Indecomposable, true, std::nullopt};
}

Verdict decide_local(const Search& s) {
  const Ring& r = s.ring();
  for (Code a = 0; a < s.n(); ++a) {
    if (r.is_unit(a)) continue;
    for (Code b = a; b < s.n(); ++b) {
      if (!r.is_unit(b) && r.is_unit(r.add(a, b))) {
        return {PropertyId::Local, false, s.bind({{"a", a}, {"b", b}})};
      }
    }
  }
  return {PropertyId::Local, true, std::nullopt};
}

}  // namespace

std::string_view property_name(PropertyId id) { return info(id).name; }
std::string_view property_statement(PropertyId id) { return info(id).statement; }

std::optional<PropertyId> parse_property(std::string_view text) {
  std::string key;
  for (char c : text) key.push_back(c == '-' ? '_' : static_cast<char>(std::toupper(c)));
  for (const auto& entry : kInfo) {
    if (entry.name == key) return entry.id;
  }
  return std::nullopt;
}

std::optional<Element> Witness::get(std::string_view name) const {
  for (const auto& [key, value] : bindings) {
    if (key == name) return value;
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> format_witness(const Ring& ring,
                                                                const std::optional<Witness>& w) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!w) return out;
  for (const auto& [name, e] : w->bindings) out.emplace_back(name, ring.format(e));
  return out;
}

std::optional<HermiteFactorization> hermite_factorization(const Ring& ring, Element a, Element b) {
  auto f = hermite_factor(ring, ring.code_of(a), ring.code_of(b));
  if (!f) return std::nullopt;
  return HermiteFactorization{ring.element((*f)[0]), ring.element((*f)[1]),
                              ring.element((*f)[2])};
}

Verdict decide_hermite(const Ring& ring, const DecideOptions& options) {
  Search s(ring, options);
  Sampler sampler;
  std::optional<Verdict> verdict;
  for (Code a = 0; a < s.n() && !verdict; ++a) {
    s.tick();
    for (Code b = 0; b < s.n(); ++b) {
      auto f = hermite_factor(ring, a, b);
      if (!f) {
        verdict = Verdict{PropertyId::Hermite, false, s.bind({{"a", a}, {"b", b}})};
        break;
      }
      const auto [d, a1, b1] = *f;
      sampler.offer(d != ring.zero_code() && d != ring.one_code(), [&] {
        return s.bind({{"a", a}, {"b", b}, {"d", d}, {"a1", a1}, {"b1", b1}});
      });
    }
  }
  if (!verdict) verdict = Verdict{PropertyId::Hermite, true, sampler.take()};
  if (options.cross_check && ring.order() <= options.matrix_oracle_cap) {
    if (hermite_matrix_oracle(ring, options).holds != verdict->holds) {
      throw std::logic_error("Hermite factorization route disagrees with the matrix oracle on " +
                             ring.label());
    }
  }
  return *verdict;
}

Verdict hermite_matrix_oracle(const Ring& ring, const DecideOptions& options) {
  if (ring.order() > options.matrix_oracle_cap) {
    throw CapExceeded("matrix oracle over " + ring.label() + " exceeds the order cap " +
                      std::to_string(options.matrix_oracle_cap));
  }
  Search s(ring, options);
  const Code n = s.n();
  // Invertible 2x2 matrices [[p, q], [r, t]]: determinant pt - qr is a unit.
  std::vector<std::array<Code, 4>> invertible;
  for (Code p = 0; p < n; ++p) {
    for (Code q = 0; q < n; ++q) {
      for (Code r = 0; r < n; ++r) {
        for (Code t = 0; t < n; ++t) {
          if (ring.is_unit(ring.sub(ring.mul(p, t), ring.mul(q, r)))) {
            invertible.push_back({p, q, r, t});
          }
        }
      }
    }
  }
  Sampler sampler;
  for (Code a = 0; a < n; ++a) {
    s.tick();
    for (Code b = 0; b < n; ++b) {
      // Row (a b) times Q is diagonal iff its second entry a*q + b*t vanishes.
      const std::array<Code, 4>* row = nullptr;
      for (const auto& m : invertible) {
        if (ring.add(ring.mul(a, m[1]), ring.mul(b, m[3])) == ring.zero_code()) {
          row = &m;
          break;
        }
      }
      // P times column (a b)^T is diagonal iff r*a + t*b vanishes.
      const std::array<Code, 4>* column = nullptr;
      for (const auto& m : invertible) {
        if (ring.add(ring.mul(m[2], a), ring.mul(m[3], b)) == ring.zero_code()) {
          column = &m;
          break;
        }
      }
      if (!row || !column) return {PropertyId::Hermite, false, s.bind({{"a", a}, {"b", b}})};
      sampler.offer(false, [&] {
        return s.bind({{"a", a}, {"b", b}, {"q11", (*row)[0]}, {"q12", (*row)[1]},
                       {"q21", (*row)[2]}, {"q22", (*row)[3]}});
      });
    }
  }
  return {PropertyId::Hermite, true, sampler.take()};
}

Verdict decide(PropertyId prop, const Ring& ring, const DecideOptions& options) {
  Search s(ring, options);
  Verdict v = [&]() -> Verdict {
    if (auto shape = range_one_shape(prop)) return decide_range_one(s, prop, *shape);
    switch (prop) {
      case PropertyId::StableRange2:
        return decide_sr2(s, options);
      case PropertyId::RegularLocal:
        return decide_local_kind(s, prop, Target::Regular);
      case PropertyId::VnrLocal:
        return decide_local_kind(s, prop, Target::Vnr);
      case PropertyId::ShLocal:
        return decide_sh_local(s);
      case PropertyId::Clean:
        return decide_sum_decomposition(s, prop, Target::Unit, "u");
      case PropertyId::AlmostClean:
        return decide_sum_decomposition(s, prop, Target::Regular, "r");
      case PropertyId::PpElementwise:
        return decide_pp(s);
      case PropertyId::Bezout:
        return decide_bezout(s);
      case PropertyId::Hermite:
        return decide_hermite(ring, options);
      case PropertyId::AdditivelyRegular:
        return decide_additively_regular(s);
      case PropertyId::Indecomposable:
        return decide_indecomposable(s);
      case PropertyId::Local:
        return decide_local(s);
      default:
        throw std::logic_error("unhandled property");
    }
  }();
  if (options.cross_check && !reverify(ring, v)) {
    throw std::logic_error("witness for " + std::string(property_name(prop)) + " on " +
                           ring.label() + " does not re-verify");
  }
  return v;
}

std::optional<Witness> witness_for(PropertyId prop, const Ring& ring,
                                   std::span<const Element> tuple) {
  DecideOptions unlimited;
  Search s(ring, unlimited);
  std::vector<Code> c;
  for (auto e : tuple) c.push_back(ring.code_of(e));
  auto need = [&](std::size_t k) {
    if (c.size() != k) {
      throw std::invalid_argument(std::string(property_name(prop)) + " takes " +
                                  std::to_string(k) + " elements");
    }
  };
  if (auto shape = range_one_shape(prop)) {
    need(2);
    auto y = range_one_multiplier(ring, *shape, c[0], c[1]);
    if (!ring.comaximal(c[0], c[1]) || !y) return std::nullopt;
    return s.bind({{"a", c[0]}, {"b", c[1]}, {shape->multiplier, *y}});
  }
  switch (prop) {
    case PropertyId::StableRange2: {
      need(3);
      const auto ab = sum_mask(ring, ring.multiples(c[0]).mask, ring.multiples(c[1]).mask);
      if (!triple_unimodular(ring, ab, c[2])) return std::nullopt;
      auto shift = sr2_shift(ring, c[0], c[1], c[2]);
      if (!shift) return std::nullopt;
      return s.bind(
          {{"a", c[0]}, {"b", c[1]}, {"c", c[2]}, {"x", shift->first}, {"y", shift->second}});
    }
    case PropertyId::RegularLocal:
    case PropertyId::VnrLocal: {
      need(1);
      const auto target = prop == PropertyId::RegularLocal ? Target::Regular : Target::Vnr;
      if (satisfies(ring, target, c[0])) return s.bind({{"a", c[0]}});
      const Code complement = ring.sub(ring.one_code(), c[0]);
      if (satisfies(ring, target, complement)) return s.bind({{"a", c[0]}, {"1-a", complement}});
      return std::nullopt;
    }
    case PropertyId::ShLocal: {
      need(2);
      if (!ring.comaximal(c[0], c[1])) return std::nullopt;
      for (Code x : c) {
        if (class_of(ring, x).is_semihereditary) return s.bind({{"semihereditary", x}});
      }
      return std::nullopt;
    }
    case PropertyId::Clean:
    case PropertyId::AlmostClean: {
      need(1);
      auto split = prop == PropertyId::Clean ? clean_decompose(ring, tuple[0])
                                             : almost_clean_decompose(ring, tuple[0]);
      if (!split) return std::nullopt;
      return s.bind({{"a", c[0]},
                     {"e", split->first.code},
                     {prop == PropertyId::Clean ? "u" : "r", split->second.code}});
    }
    case PropertyId::PpElementwise: {
      need(1);
      const auto& k = class_of(ring, c[0]);
      if (!k.is_semihereditary) return std::nullopt;
      const Code phi = k.sh_witness->code;
      return s.bind(
          {{"a", c[0]}, {"e", ring.sub(ring.one_code(), phi)}, {"r", ring.sub(c[0], phi)}});
    }
    case PropertyId::Bezout: {
      need(2);
      auto w = bezout_pair(ring, tuple[0], tuple[1]);
      if (!w) return std::nullopt;
      return s.bind({{"a", c[0]},
                     {"b", c[1]},
                     {"d", w->d.code},
                     {"a0", w->a0.code},
                     {"b0", w->b0.code},
                     {"x", w->x.code},
                     {"y", w->y.code}});
    }
    case PropertyId::Hermite: {
      need(2);
      auto f = hermite_factor(ring, c[0], c[1]);
      if (!f) return std::nullopt;
      return s.bind({{"a", c[0]}, {"b", c[1]}, {"d", (*f)[0]}, {"a1", (*f)[1]}, {"b1", (*f)[2]}});
    }
    case PropertyId::AdditivelyRegular: {
      need(2);
      if (!ring.is_regular(c[1])) return std::nullopt;
      auto u = additive_shift(ring, c[0], c[1]);
      if (!u) return std::nullopt;
      return s.bind({{"a", c[0]}, {"b", c[1]}, {"u", *u}});
    }
    default:
      throw std::invalid_argument(std::string(property_name(prop)) +
                                  " has no per-tuple witness");
  }
}

}  // namespace ringrange
