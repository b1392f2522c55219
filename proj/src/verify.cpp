// Naive re-checks of verdict witnesses. Nothing here touches the ring's cached
// subsets or the element classification table; only the Cayley tables.

#include "ringrange/properties.hpp"

namespace ringrange {

namespace {

class Raw {
 public:
  explicit Raw(const Ring& r) : r_(r), n_(static_cast<Code>(r.order())) {}

  Code n() const { return n_; }
  Code one() const { return r_.one_code(); }
  Code zero() const { return r_.zero_code(); }
  Code add(Code a, Code b) const { return r_.add(a, b); }
  Code mul(Code a, Code b) const { return r_.mul(a, b); }
  Code sub(Code a, Code b) const { return r_.sub(a, b); }

  bool unit(Code a) const {
    for (Code x = 0; x < n_; ++x) {
      if (mul(a, x) == one()) return true;
    }
    return false;
  }

  bool regular(Code a) const {
    if (a == zero()) return false;
    for (Code x = 0; x < n_; ++x) {
      if (x != zero() && mul(a, x) == zero()) return false;
    }
    return true;
  }

  bool idempotent(Code a) const { return mul(a, a) == a; }

  bool vnr(Code a) const {
    for (Code x = 0; x < n_; ++x) {
      if (mul(mul(a, x), a) == a) return true;
    }
    return false;
  }

  std::vector<bool> multiples(Code a) const {
    std::vector<bool> m(n_, false);
    for (Code x = 0; x < n_; ++x) m[mul(a, x)] = true;
    return m;
  }

  bool semihereditary(Code a) const {
    std::vector<bool> ann(n_, false);
    for (Code x = 0; x < n_; ++x) ann[x] = mul(a, x) == zero();
    for (Code phi = 0; phi < n_; ++phi) {
      if (idempotent(phi) && multiples(phi) == ann) return true;
    }
    return false;
  }

  bool comaximal(Code a, Code b) const {
    for (Code u = 0; u < n_; ++u) {
      for (Code v = 0; v < n_; ++v) {
        if (add(mul(a, u), mul(b, v)) == one()) return true;
      }
    }
    return false;
  }

  bool comaximal3(Code a, Code b, Code c) const {
    std::vector<bool> ab(n_, false);
    for (Code u = 0; u < n_; ++u) {
      for (Code v = 0; v < n_; ++v) ab[add(mul(a, u), mul(b, v))] = true;
    }
    for (Code w = 0; w < n_; ++w) {
      if (ab[sub(one(), mul(c, w))]) return true;
    }
    return false;
  }

  bool principal(Code a, Code b) const {
    std::vector<bool> sum(n_, false);
    for (Code u = 0; u < n_; ++u) {
      for (Code v = 0; v < n_; ++v) sum[add(mul(a, u), mul(b, v))] = true;
    }
    for (Code d = 0; d < n_; ++d) {
      if (multiples(d) == sum) return true;
    }
    return false;
  }

  bool in_target(PropertyId id, Code c) const {
    switch (id) {
      case PropertyId::StableRange1:
        return unit(c);
      case PropertyId::VnrRange1:
        return vnr(c);
      case PropertyId::ShRange1:
        return semihereditary(c);
      default:
        return regular(c);
    }
  }

  bool hermite_pair(Code a, Code b) const {
    for (Code d = 0; d < n_; ++d) {
      for (Code a1 = 0; a1 < n_; ++a1) {
        if (mul(d, a1) != a) continue;
        for (Code b1 = 0; b1 < n_; ++b1) {
          if (mul(d, b1) == b && comaximal(a1, b1)) return true;
        }
      }
    }
    return false;
  }

 private:
  const Ring& r_;
  Code n_;
};

}  // namespace

bool reverify(const Ring& ring, const Verdict& v) {
  const Raw raw(ring);
  auto get = [&](const char* name) -> std::optional<Code> {
    if (!v.witness) return std::nullopt;
    auto e = v.witness->get(name);
    if (!e || !ring.owns(*e)) return std::nullopt;
    return e->code;
  };
  const auto a = get("a");
  const auto b = get("b");

  switch (v.property) {
    case PropertyId::StableRange1:
    case PropertyId::VnrRange1:
    case PropertyId::ShRange1:
    case PropertyId::RegularRange1:
    case PropertyId::IdempotentRegularRange1: {
      if (!a || !b || !raw.comaximal(*a, *b)) return false;
      const bool idem = v.property == PropertyId::IdempotentRegularRange1;
      if (v.holds) {
        auto y = get(v.property == PropertyId::StableRange1 ? "t" : idem ? "e" : "y");
        if (!y || (idem && !raw.idempotent(*y))) return false;
        return raw.in_target(v.property, raw.add(*a, raw.mul(*b, *y)));
      }
      for (Code y = 0; y < raw.n(); ++y) {
        if (idem && !raw.idempotent(y)) continue;
        if (raw.in_target(v.property, raw.add(*a, raw.mul(*b, y)))) return false;
      }
      return true;
    }
    case PropertyId::StableRange2: {
      const auto c = get("c");
      if (!a || !b || !c || !raw.comaximal3(*a, *b, *c)) return false;
      if (v.holds) {
        auto x = get("x");
        auto y = get("y");
        return x && y &&
               raw.comaximal(raw.add(*a, raw.mul(*c, *x)), raw.add(*b, raw.mul(*c, *y)));
      }
      for (Code x = 0; x < raw.n(); ++x) {
        for (Code y = 0; y < raw.n(); ++y) {
          if (raw.comaximal(raw.add(*a, raw.mul(*c, x)), raw.add(*b, raw.mul(*c, y)))) {
            return false;
          }
        }
      }
      return true;
    }
    case PropertyId::RegularLocal:
    case PropertyId::VnrLocal: {
      if (!a) return false;
      auto ok = [&](Code x) {
        return v.property == PropertyId::RegularLocal ? raw.regular(x) : raw.vnr(x);
      };
      const bool either = ok(*a) || ok(raw.sub(raw.one(), *a));
      return either == v.holds;
    }
    case PropertyId::ShLocal: {
      if (!a || !b || !raw.comaximal(*a, *b)) return false;
      const bool either = raw.semihereditary(*a) || raw.semihereditary(*b);
      return either == v.holds;
    }
    case PropertyId::Clean:
    case PropertyId::AlmostClean: {
      if (!a) return false;
      auto ok = [&](Code x) {
        return v.property == PropertyId::Clean ? raw.unit(x) : raw.regular(x);
      };
      if (v.holds) {
        auto e = get("e");
        auto rest = get(v.property == PropertyId::Clean ? "u" : "r");
        return e && rest && raw.idempotent(*e) && ok(*rest) && raw.add(*e, *rest) == *a;
      }
      for (Code e = 0; e < raw.n(); ++e) {
        if (raw.idempotent(e) && ok(raw.sub(*a, e))) return false;
      }
      return true;
    }
    case PropertyId::PpElementwise: {
      if (!a) return false;
      if (v.holds) {
        auto e = get("e");
        auto r = get("r");
        return e && r && raw.idempotent(*e) && raw.regular(*r) && raw.mul(*e, *r) == *a;
      }
      for (Code e = 0; e < raw.n(); ++e) {
        if (!raw.idempotent(e)) continue;
        for (Code r = 0; r < raw.n(); ++r) {
          if (raw.regular(r) && raw.mul(e, r) == *a) return false;
        }
      }
      return true;
    }
    case PropertyId::Bezout: {
      if (!a || !b) return false;
      if (v.holds) {
        auto d = get("d");
        if (!d) return false;
        std::vector<bool> sum(raw.n(), false);
        for (Code u = 0; u < raw.n(); ++u) {
          for (Code w = 0; w < raw.n(); ++w) sum[raw.add(raw.mul(*a, u), raw.mul(*b, w))] = true;
        }
        return raw.multiples(*d) == sum;
      }
      return !raw.principal(*a, *b);
    }
    case PropertyId::Hermite: {
      if (!a || !b) return false;
      if (v.holds) {
        if (auto d = get("d")) {
          auto a1 = get("a1");
          auto b1 = get("b1");
          return a1 && b1 && raw.mul(*d, *a1) == *a && raw.mul(*d, *b1) == *b &&
                 raw.comaximal(*a1, *b1);
        }
        // Matrix-oracle sample: (a b) Q has zero second entry and det Q is a unit.
        auto q11 = get("q11");
        auto q12 = get("q12");
        auto q21 = get("q21");
        auto q22 = get("q22");
        if (!q11 || !q12 || !q21 || !q22) return false;
        return raw.unit(raw.sub(raw.mul(*q11, *q22), raw.mul(*q12, *q21))) &&
               raw.add(raw.mul(*a, *q12), raw.mul(*b, *q22)) == raw.zero();
      }
      return !raw.hermite_pair(*a, *b);
    }
    case PropertyId::AdditivelyRegular: {
      if (!a || !b || !raw.regular(*b)) return false;
      if (v.holds) {
        auto u = get("u");
        return u && raw.regular(raw.add(*a, raw.mul(*u, *b)));
      }
      for (Code u = 0; u < raw.n(); ++u) {
        if (raw.regular(raw.add(*a, raw.mul(u, *b)))) return false;
      }
      return true;
    }
    case PropertyId::Indecomposable: {
      std::size_t count = 0;
      for (Code e = 0; e < raw.n(); ++e) count += raw.idempotent(e) ? 1 : 0;
      if (v.holds) return count == 2;
      auto e = get("e");
      return e && raw.idempotent(*e) && *e != raw.zero() && *e != raw.one();
    }
    case PropertyId::Local: {
      if (v.holds) {
        for (Code x = 0; x < raw.n(); ++x) {
          for (Code y = 0; y < raw.n(); ++y) {
            if (!raw.unit(x) && !raw.unit(y) && raw.unit(raw.add(x, y))) return false;
          }
        }
        return true;
      }
      return a && b && !raw.unit(*a) && !raw.unit(*b) && raw.unit(raw.add(*a, *b));
    }
  }
  return false;
}

}  // namespace ringrange
