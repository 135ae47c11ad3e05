/*
   Copyright 2026 The Spectral Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spectral/ring.hpp"

using namespace spectral;

namespace {

Elem E(std::uint32_t i) { return Elem{i}; }

bool is_field(const Ring& R) {
    for (Elem a : R.elements()) {
        if (a == R.zero()) continue;
        if (!classify_element(R, a).unit) return false;
    }
    return true;
}

} // namespace

TEST(RingCore, ModularTablesMatchIntegerArithmetic) {
    for (std::uint32_t n = 1; n <= 30; ++n) {
        const Ring R = build_ring(RingSpec::modular(n));
        ASSERT_EQ(R.size(), n);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                EXPECT_EQ(R.add(E(a), E(b)).index, (a + b) % n);
                EXPECT_EQ(R.mul(E(a), E(b)).index, (a * b) % n);
            }
    }
}

TEST(RingCore, SmallExamples) {
    const Ring z6 = build_ring(RingSpec::modular(6));
    EXPECT_EQ(z6.zero().index, 0U);
    EXPECT_EQ(z6.one().index, 1U);
    EXPECT_EQ(elem_arith(z6, ArithOp::Add, 2, 5).index, 1U);
    EXPECT_EQ(elem_arith(z6, ArithOp::Mul, 4, 4).index, 4U);
    EXPECT_EQ(elem_arith(z6, ArithOp::Neg, 2).index, 4U);
    EXPECT_THROW(elem_arith(z6, ArithOp::Add, 2), Error);
    EXPECT_THROW(elem_arith(z6, ArithOp::Add, 6, 1), Error);
}

TEST(RingCore, FieldsAndLocalRings) {
    EXPECT_TRUE(is_field(build_ring(RingSpec::poly(2, {1, 1, 1}))));
    EXPECT_TRUE(is_field(build_ring(RingSpec::poly(3, {1, 0, 1}))));
    EXPECT_FALSE(is_field(build_ring(RingSpec::poly(2, {0, 0, 1}))));
    EXPECT_FALSE(is_field(build_ring(RingSpec::poly(2, {1, 0, 1}))));
    const Ring d = build_ring(RingSpec::poly(2, {0, 0, 1}));
    // index 2 is x
    EXPECT_EQ(d.mul(E(2), E(2)), d.zero());
    EXPECT_EQ(build_ring(RingSpec::poly(2, {0, 0, 0, 1})).size(), 8U);
}

TEST(RingCore, RejectsBadPolynomials) {
    EXPECT_THROW(build_ring(RingSpec::poly(4, {1, 1, 1})), Error);
    EXPECT_THROW(build_ring(RingSpec::poly(2, {1, 1, 0})), Error);
}

TEST(RingCore, ProductIsMixedRadix) {
    const Ring R = build_ring(RingSpec::product({RingSpec::modular(2), RingSpec::modular(3)}));
    ASSERT_EQ(R.size(), 6U);
    // (a,b) sits at a*3+b
    EXPECT_EQ(R.add(E(1 * 3 + 2), E(1 * 3 + 2)).index, 0U * 3 + 1);
    EXPECT_EQ(R.mul(E(1 * 3 + 2), E(1 * 3 + 2)).index, 1U * 3 + 1);
    EXPECT_EQ(R.one().index, 4U);
}

TEST(RingCore, TableAxiomsAreChecked) {
    TableSpec t;
    t.size = 2;
    t.add = {{0, 1}, {1, 0}};
    t.mul = {{0, 0}, {0, 0}};
    t.zero = 0;
    t.one = 1;
    EXPECT_THROW(build_ring(RingSpec{t}), Error);
    t.mul = {{0, 0}, {0, 1}};
    EXPECT_EQ(build_ring(RingSpec{t}).size(), 2U);
    t.add = {{0, 1}, {1, 1}};
    EXPECT_THROW(build_ring(RingSpec{t}), Error);
}

TEST(RingCore, TableJsonRoundTrip) {
    const auto t = parse_table_json(R"({"size":3,"zero":0,"one":1,
        "add":[[0,1,2],[1,2,0],[2,0,1]],"mul":[[0,0,0],[0,1,2],[0,2,1]],"labels":["0","1","-1"]})");
    const Ring R = build_ring(RingSpec{t});
    const Ring z3 = build_ring(RingSpec::modular(3));
    for (Elem a : R.elements())
        for (Elem b : R.elements()) {
            EXPECT_EQ(R.add(a, b), z3.add(a, b));
            EXPECT_EQ(R.mul(a, b), z3.mul(a, b));
        }
    EXPECT_EQ(R.label(E(2)), "-1");
    EXPECT_EQ(R.parse_elem("-1"), E(2));
    EXPECT_THROW(parse_table_json("{\"size\":2}"), Error);
    EXPECT_THROW(parse_table_json("not json"), Error);
}

TEST(RingCore, ElementClassesAgainstDefinitions) {
    for (std::uint32_t n : {4U, 6U, 8U, 12U, 18U, 30U}) {
        const Ring R = build_ring(RingSpec::modular(n));
        for (Elem a : R.elements()) {
            const auto c = classify_element(R, a);
            bool unit = false, zd = false, reg = false;
            for (Elem b : R.elements()) {
                unit |= R.mul(a, b) == R.one();
                zd |= a != R.zero() && b != R.zero() && R.mul(a, b) == R.zero();
                reg |= R.mul(R.mul(a, a), b) == a;
            }
            bool nil = false;
            Elem p = a;
            for (std::uint32_t k = 0; k < n; ++k, p = R.mul(p, a)) nil |= p == R.zero();
            EXPECT_EQ(c.unit, unit) << n << ' ' << a.index;
            EXPECT_EQ(c.zero_divisor, zd) << n << ' ' << a.index;
            EXPECT_EQ(c.regular, reg) << n << ' ' << a.index;
            EXPECT_EQ(c.nilpotent, nil) << n << ' ' << a.index;
            EXPECT_EQ(c.idempotent, R.mul(a, a) == a) << n << ' ' << a.index;
        }
    }
}

TEST(RingCore, ElementExamples) {
    const Ring z6 = build_ring(RingSpec::modular(6));
    EXPECT_EQ(classify_element(z6, E(3)), (ElementClassSet{false, true, false, true, true}));
    const Ring z4 = build_ring(RingSpec::modular(4));
    EXPECT_EQ(classify_element(z4, E(2)), (ElementClassSet{false, false, true, true, false}));
    EXPECT_EQ(classify_element(z4, E(1)), (ElementClassSet{true, true, false, false, true}));
}

TEST(RingCore, Homomorphisms) {
    const Ring z12 = build_ring(RingSpec::modular(12));
    const Ring z6 = build_ring(RingSpec::modular(6));
    const Ring z4 = build_ring(RingSpec::modular(4));
    const Ring z2 = build_ring(RingSpec::modular(2));
    std::vector<std::uint32_t> mod6, id6{0, 1, 2, 3, 4, 5}, mod2{0, 1, 0, 1};
    for (std::uint32_t a = 0; a < 12; ++a) mod6.push_back(a % 6);
    EXPECT_NO_THROW(build_hom(z12, z6, mod6));
    EXPECT_NO_THROW(build_hom(z6, z6, id6));
    EXPECT_NO_THROW(build_hom(z4, z2, mod2));
    EXPECT_THROW(build_hom(z4, z2, {0, 0, 0, 0}), Error);
    EXPECT_THROW(build_hom(z4, z2, {0, 1}), Error);
}

TEST(RingCore, Subrings) {
    const Ring z6 = build_ring(RingSpec::modular(6));
    EXPECT_THROW(build_subring(z6, BitSet::of(6, std::vector<int>{0, 3})), Error);
    const Subring whole = build_subring(z6, BitSet::full(6));
    EXPECT_EQ(whole.ring.size(), 6U);
    for (Elem a : whole.ring.elements()) EXPECT_EQ(whole.embedding(a), a);

    const Ring v = build_ring(RingSpec::product({RingSpec::modular(2), RingSpec::modular(2)}));
    const Subring diag = build_subring(v, BitSet::of(4, std::vector<int>{0, 3}));
    EXPECT_EQ(diag.ring.size(), 2U);
    EXPECT_EQ(generated_subring(v, {}), BitSet::of(4, std::vector<int>{0, 3}));
    EXPECT_EQ(generated_subring(v, {E(1)}).count(), 4U);
}

TEST(RingCore, PowAndLabels) {
    const Ring z7 = build_ring(RingSpec::modular(7));
    EXPECT_EQ(z7.pow(E(3), 6), z7.one());
    EXPECT_EQ(z7.pow(E(3), 0), z7.one());
    const Ring g = build_ring(RingSpec::poly(2, {1, 1, 1}));
    for (Elem a : g.elements()) EXPECT_EQ(g.parse_elem(g.label(a)), a);
    EXPECT_EQ(to_string(RingSpec::product({RingSpec::modular(2), RingSpec::poly(3, {0, 0, 1})})), "Z/2 x GF(3)[x]/(x^2)");
    EXPECT_THROW(build_ring(RingSpec::modular(100), RingBuildOptions{64, true}), Error);
}
