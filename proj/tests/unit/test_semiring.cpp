#include <doctest.h>

#include <random>

#include "semimod/presets.hpp"
#include "semimod/semiring.hpp"

using namespace semimod;

TEST_CASE("checked arithmetic rejects overflow") {
  CHECK(checked_add(3, 4) == 7);
  CHECK(checked_mul(1u << 20, 1u << 20) == (1ull << 40));
  CHECK_THROWS_AS(checked_add(~0ull, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(1ull << 40, 1ull << 40), OverflowError);
}

TEST_CASE("natvec support and addition") {
  NatVec a({0, 2, 0, 0, 0, 1});  // 2s + w0 in the KL(S3) basis order
  CHECK(support(a) == std::vector<std::uint32_t>{1, 5});
  CHECK(support(NatVec::zeros(6)).empty());
  CHECK(add(NatVec({1, 0}), NatVec({0, 3})) == NatVec({1, 3}));
  CHECK_THROWS_AS(add(NatVec({1}), NatVec({1, 2})), MalformedError);
  CHECK_THROWS_AS(add(NatVec({~0ull}), NatVec({1})), OverflowError);

  const auto s = NatVec::basis(6, 1), t = NatVec::basis(6, 2), w0 = NatVec::basis(6, 5);
  CHECK(add(s, s) == NatVec::basis(6, 1, 2));
  CHECK(add(s, t) == NatVec({0, 1, 1, 0, 0, 0}));
  CHECK(add(NatVec::zeros(6), w0) == w0);
}

TEST_CASE("boolean semiring tables validate") {
  CHECK(boolean_semiring().validate().empty());
}

TEST_CASE("one-element semiring is valid") {
  FiniteSemiring one({"0"}, {{0}}, {{0}}, 0, 0);
  CHECK(one.validate().empty());
}

TEST_CASE("corrupted two-element tables against a brute-force axiom scan") {
  // an exhaustive scan over all semiring axioms on two-element tables
  auto scan = [](const FiniteSemiring& r) {
    for (std::uint32_t a = 0; a < 2; ++a) {
      if (r.add(a, r.zero()) != a || r.mul(a, r.one()) != a || r.mul(r.one(), a) != a ||
          r.mul(a, r.zero()) != r.zero() || r.mul(r.zero(), a) != r.zero())
        return false;
      for (std::uint32_t b = 0; b < 2; ++b) {
        if (r.add(a, b) != r.add(b, a)) return false;
        for (std::uint32_t c = 0; c < 2; ++c) {
          if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return false;
          if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return false;
          if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return false;
          if (r.mul(c, r.add(a, b)) != r.add(r.mul(c, a), r.mul(c, b))) return false;
        }
      }
    }
    return true;
  };

  // changing add(1,1) to 0 turns the boolean tables into the two-element
  // field, which still satisfies every axiom
  FiniteSemiring field({"0", "1"}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}, 0, 1);
  CHECK(scan(field));
  CHECK(field.validate().empty());

  // changing mul(1,1) to 0 instead breaks the multiplicative identity
  FiniteSemiring broken({"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 0}}, 0, 1);
  CHECK(!scan(broken));
  CHECK(!broken.validate().empty());

  // and erasing the additive identity row is caught too
  FiniteSemiring no_zero({"0", "1"}, {{1, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1);
  CHECK(!scan(no_zero));
  CHECK(!no_zero.validate().empty());
}

TEST_CASE("malformed tables are rejected at construction") {
  CHECK_THROWS_AS(FiniteSemiring({"0", "1"}, {{0, 1}}, {{0, 0}, {0, 1}}, 0, 1), MalformedError);
  CHECK_THROWS_AS(FiniteSemiring({"0", "0"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1),
                  MalformedError);
  CHECK_THROWS_AS(BasedSemiring({"a"}, NatVec({1, 0}), {{NatVec({1})}}), MalformedError);
  CHECK_THROWS_AS(BasedSemiring({"a", "b"}, NatVec({1, 0}), {{NatVec({1, 0})}}), MalformedError);
}

TEST_CASE("KL(S3) products from the type A2 table") {
  const BasedSemiring r = kl_dihedral(3);
  const std::size_t k = 6;
  const auto e = NatVec::basis(k, r.basis_index("e"));
  const auto s = NatVec::basis(k, r.basis_index("s"));
  const auto st = NatVec::basis(k, r.basis_index("st"));
  const auto ts = NatVec::basis(k, r.basis_index("ts"));
  const auto w0 = NatVec::basis(k, r.basis_index("w0"));

  CHECK(r.mul(s, s) == scaled(s, 2));
  for (std::size_t i = 0; i < k; ++i) {
    CHECK(r.mul(e, NatVec::basis(k, i)) == NatVec::basis(k, i));
    CHECK(r.mul(NatVec::basis(k, i), e) == NatVec::basis(k, i));
  }
  CHECK(r.mul(st, ts) == add(scaled(s, 2), scaled(w0, 2)));
  CHECK(support(r.mul(s, ts)) ==
        std::vector<std::uint32_t>{static_cast<std::uint32_t>(r.basis_index("s")),
                                   static_cast<std::uint32_t>(r.basis_index("w0"))});
}

TEST_CASE("mul is bilinear and unit acts on both sides") {
  const BasedSemiring r = kl_dihedral(3);
  std::mt19937 rng(42);
  std::uniform_int_distribution<Nat> coeff(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    NatVec a = NatVec::zeros(6), a2 = NatVec::zeros(6), b = NatVec::zeros(6);
    for (int i = 0; i < 6; ++i) {
      a[i] = coeff(rng);
      a2[i] = coeff(rng);
      b[i] = coeff(rng);
    }
    CHECK(r.mul(add(a, a2), b) == add(r.mul(a, b), r.mul(a2, b)));
    CHECK(r.mul(b, add(a, a2)) == add(r.mul(b, a), r.mul(b, a2)));
    CHECK(r.mul(r.unit(), a) == a);
    CHECK(r.mul(a, r.unit()) == a);
  }
}

TEST_CASE("size law for supports") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Nat> coeff(0, 3);
  std::uniform_int_distribution<Nat> pos(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    NatVec a = NatVec::zeros(8), b = NatVec::zeros(8);
    for (int i = 0; i < 8; ++i) {
      a[i] = coeff(rng);
      b[i] = coeff(rng);
    }
    const std::size_t sa = support(a).size(), sb = support(b).size();
    CHECK(support(add(a, b)).size() >= std::max(sa, sb));
    CHECK(support(scaled(a, pos(rng))) == support(a));
  }
}

TEST_CASE("coefficient overflow surfaces as a hard error") {
  const BasedSemiring r = znn_semiring();
  const NatVec big({1ull << 40});
  CHECK_THROWS_AS(r.mul(big, big), OverflowError);
}

TEST_CASE("based semiring validation reports broken axioms") {
  // basis {1, a} with 1*a = 2a fails the unit axiom
  std::vector<std::vector<NatVec>> mult = {{NatVec({1, 0}), NatVec({0, 2})},
                                           {NatVec({0, 1}), NatVec({0, 1})}};
  BasedSemiring bad({"1", "a"}, NatVec({1, 0}), std::move(mult));
  CHECK(!bad.validate().empty());
}

TEST_CASE("every preset semiring validates") {
  CHECK(boolean_semiring().validate().empty());
  for (std::uint64_t k : {1, 2, 3, 4}) CHECK(nat_rees(k).validate().empty());
  for (const char* g : {"s2", "s3", "c2", "c5", "d8"})
    CHECK(group_semiring(group_preset(g)).validate().empty());
  for (std::uint32_t n = 3; n <= 6; ++n) CHECK(kl_dihedral(n).validate().empty());
  CHECK(kl_hat_s2().validate().empty());
  CHECK(znn_semiring().validate().empty());
  CHECK(group_semiring_over(boolean_semiring(), symmetric3()).validate().empty());
  CHECK(group_semiring_over(nat_rees(3), symmetric2()).validate().empty());
}
