#include <doctest.h>

#include "frobspan/constructions.hpp"
#include "frobspan/tqft.hpp"

using namespace frobspan;

namespace {

using Kind = GeneratorWord::Kind;

GeneratorWord leaf(Kind k) { return GeneratorWord::leaf(k); }

// Partition function by literal span composition, materializing every apex.
Nat oracle_partition_function(const FrobeniusDatum& f, unsigned genus) {
  Span handle = compose_spans(comultiplication_span(f), mu_span(f));
  Span total = eta_span(f);
  for (unsigned i = 0; i < genus; ++i) total = compose_spans(total, handle);
  total = compose_spans(total, counit_span(f));
  return Nat(total.apex.size());
}

}  // namespace

TEST_CASE("transfer matrix of the two-element identity family") {
  for (unsigned n : {0u, 1u, 2u, 3u}) {
    FrobeniusDatum f = two_element_family(1, n, TwoElementAlpha::id).datum;
    TransferMatrix t = transfer_matrix(f);
    CHECK(t.at("a", "a") == 2);
    CHECK(t.at("a", "b") == n);
    CHECK(t.at("b", "a") == n);
    // The corner entry counts n^2 trajectories through the free fiber plus
    // one through each of the two degenerate fibers.
    CHECK(t.at("b", "b") == Nat(n) * n + 2);
    // Same counts through the positional word evaluator.
    MultiplicityMatrix via_word =
        evaluate_word(f, GeneratorWord::compose_of({leaf(Kind::mult), leaf(Kind::comult)}));
    CHECK(via_word == t);
  }
}

TEST_CASE("transfer matrix of the two-element swap family") {
  for (unsigned m : {0u, 1u, 2u, 4u}) {
    FrobeniusDatum f = two_element_family(m, 0, TwoElementAlpha::swap).datum;
    TransferMatrix t = transfer_matrix(f);
    CHECK(t.at("a", "a") == 0);
    CHECK(t.at("a", "b") == 2);
    CHECK(t.at("b", "a") == Nat(m) * 2);
    CHECK(t.at("b", "b") == 0);
  }
}

TEST_CASE("transfer matrix of an abelian group is |G| on the omega-shifted diagonal") {
  Group g = cyclic_group(4);
  FrobeniusDatum f = group_frobenius(g, "3");
  TransferMatrix t = transfer_matrix(f);
  for (const auto& x : g.elements().labels())
    for (const auto& y : g.elements().labels())
      CHECK(t.at(x, y) == (y == g.mul("3", x) ? 4 : 0));
}

TEST_CASE("matrix power of the handle equals the composed handle span") {
  FrobeniusDatum f = two_element_family(1, 2, TwoElementAlpha::id).datum;
  Span handle = compose_spans(comultiplication_span(f), mu_span(f));
  TransferMatrix t = transfer_matrix(f);
  CHECK(t.multiply(t) == span_to_matrix(compose_spans(handle, handle)));
  CHECK(t.pow(3) == span_to_matrix(compose_spans(handle, compose_spans(handle, handle))));
}

TEST_CASE("abelian group invariants") {
  // omega = identity: |G|^g for every genus >= 1, and 1 at genus 0.
  for (unsigned order : {2u, 3u, 4u}) {
    FrobeniusDatum f = group_frobenius(cyclic_group(order), "0");
    Nat power = 1;
    for (unsigned g = 1; g <= 5; ++g) {
      power *= order;
      CHECK(partition_function(f, g) == power);
    }
    CHECK(partition_function(f, 0) == 1);
  }
  // omega != identity: zero unless omega^g = omega.
  FrobeniusDatum z3 = group_frobenius(cyclic_group(3), "1");
  CHECK(partition_function(z3, 1) == 3);
  CHECK(partition_function(z3, 2) == 0);
  CHECK(partition_function(z3, 3) == 0);
  CHECK(partition_function(z3, 4) == 81);
}

TEST_CASE("swap-family invariants alternate between powers and zero") {
  for (unsigned m : {0u, 1u, 2u, 3u}) {
    FrobeniusDatum f = two_element_family(m, 0, TwoElementAlpha::swap).datum;
    for (unsigned g = 0; g <= 7; ++g) {
      Nat expected = 0;
      if (g % 2 == 1) {
        expected = Nat(1) << g;  // 2^g
        for (unsigned i = 0; i < (g - 1) / 2; ++i) expected *= m;
      } else if (g == 0) {
        expected = 0;  // unit is supported on a, counit on b
      }
      CHECK(partition_function(f, g) == expected);
    }
  }
}

TEST_CASE("identity-family invariants agree across three evaluation routes") {
  for (unsigned n : {0u, 1u, 2u}) {
    FrobeniusDatum f = two_element_family(1, n, TwoElementAlpha::id).datum;
    for (unsigned g = 0; g <= 3; ++g) {
      Nat z = partition_function(f, g);
      CHECK(z == oracle_partition_function(f, g));
      MultiplicityMatrix closed = evaluate_word(f, genus_word(g));
      CHECK(closed.at("*", "*") == z);
    }
    // Higher genus: matrix route against the word route only.
    for (unsigned g = 4; g <= 6; ++g)
      CHECK(evaluate_word(f, genus_word(g)).at("*", "*") == partition_function(f, g));
  }
}

TEST_CASE("genus-0 invariant is the trajectory count of counit after unit") {
  // For omega = identity there is exactly one trajectory through the point,
  // diverging from the piecewise tabulation that reports 0 at genus 0.
  for (unsigned order : {2u, 3u, 4u}) {
    FrobeniusDatum f = group_frobenius(cyclic_group(order), "0");
    CHECK(partition_function(f, 0) == 1);
    CHECK(oracle_partition_function(f, 0) == 1);
    MultiplicityMatrix w =
        evaluate_word(f, GeneratorWord::compose_of({leaf(Kind::counit), leaf(Kind::unit)}));
    CHECK(w.at("*", "*") == 1);
  }
  // With a non-identity twist the sphere count is zero.
  CHECK(partition_function(group_frobenius(cyclic_group(3), "1"), 0) == 0);
}

TEST_CASE("partition function agrees with the word route on every example") {
  std::vector<FrobeniusDatum> data;
  data.push_back(group_frobenius(cyclic_group(2), "1"));
  data.push_back(group_frobenius(direct_product(cyclic_group(2), cyclic_group(2)),
                                 pair_label("1", "0")));
  data.push_back(group_frobenius(symmetric_group_3(), "(123)"));
  Groupoid p2 = pair_groupoid(2);
  data.push_back(groupoid_frobenius(p2, identity_section(p2)));
  data.push_back(two_element_family(1, 3, TwoElementAlpha::id).datum);
  data.push_back(two_element_family(2, 0, TwoElementAlpha::swap).datum);
  for (const FrobeniusDatum& f : data)
    for (unsigned g = 0; g <= 4; ++g)
      CHECK(evaluate_word(f, genus_word(g)).at("*", "*") == partition_function(f, g));
}

TEST_CASE("twist words detect commutativity") {
  GeneratorWord mult_twist =
      GeneratorWord::compose_of({leaf(Kind::mult), leaf(Kind::twist)});
  FrobeniusDatum commutative = two_element_family(1, 2, TwoElementAlpha::id).datum;
  CHECK(evaluate_word(commutative, mult_twist) ==
        evaluate_word(commutative, leaf(Kind::mult)));

  FrobeniusDatum noncommutative = group_frobenius(symmetric_group_3(), "e");
  CHECK(check_frobenius(noncommutative).ok());
  CHECK(evaluate_word(noncommutative, mult_twist) !=
        evaluate_word(noncommutative, leaf(Kind::mult)));
  CHECK(evaluate_word(noncommutative, mult_twist) ==
        span_to_matrix(compose_spans(twist_span(noncommutative.base.X1),
                                     mu_span(noncommutative))));
}

TEST_CASE("twist insertion before multiplication is invisible for commutative data") {
  FrobeniusDatum f = group_frobenius(cyclic_group(4), "1");
  GeneratorWord plain = genus_word(2);
  GeneratorWord twisted = GeneratorWord::compose_of(
      {leaf(Kind::counit),
       GeneratorWord::compose_of({leaf(Kind::mult), leaf(Kind::twist), leaf(Kind::comult)}),
       GeneratorWord::compose_of({leaf(Kind::mult), leaf(Kind::comult)}),
       leaf(Kind::unit)});
  CHECK(evaluate_word(f, plain) == evaluate_word(f, twisted));
}

TEST_CASE("open words have labeled product endpoints") {
  FrobeniusDatum f = two_element_family(1, 1, TwoElementAlpha::id).datum;
  MultiplicityMatrix m = evaluate_word(f, leaf(Kind::comult));
  CHECK(m.src() == f.base.X1);
  CHECK(m.dst() == product(f.base.X1, f.base.X1));
  CHECK(m == span_to_matrix(comultiplication_span(f)));

  MultiplicityMatrix tensor = evaluate_word(
      f, GeneratorWord::tensor_of({leaf(Kind::id), leaf(Kind::unit)}));
  CHECK(tensor.src() == f.base.X1);  // X^1 by a unit leg on the right
  CHECK(tensor.dst() == product(f.base.X1, f.base.X1));
}

TEST_CASE("word evaluation agrees with literal span tensors") {
  FrobeniusDatum f = two_element_family(1, 2, TwoElementAlpha::id).datum;
  const FiniteSet& x = f.base.X1;
  // tensor(mult, id): the left-nested power sets line up with the span route.
  MultiplicityMatrix via_word =
      evaluate_word(f, GeneratorWord::tensor_of({leaf(Kind::mult), leaf(Kind::id)}));
  MultiplicityMatrix via_span =
      span_to_matrix(tensor_spans(mu_span(f), identity_span(x)));
  CHECK(via_word == via_span);

  // The evaluator absorbs point factors, so the span route needs a unitor.
  MultiplicityMatrix mixed = evaluate_word(
      f, GeneratorWord::tensor_of(
             {GeneratorWord::compose_of({leaf(Kind::mult), leaf(Kind::comult)}),
              leaf(Kind::counit)}));
  Span spans = compose_spans(
      tensor_spans(compose_spans(comultiplication_span(f), mu_span(f)), counit_span(f)),
      right_unitor_span(x));
  CHECK(mixed == span_to_matrix(spans));
}

TEST_CASE("ill-typed words report the offending subtree") {
  FrobeniusDatum f = two_element_family(1, 0, TwoElementAlpha::id).datum;
  GeneratorWord bad = GeneratorWord::compose_of({leaf(Kind::mult), leaf(Kind::unit)});
  try {
    evaluate_word(f, bad);
    FAIL("expected WordError");
  } catch (const WordError& e) {
    CHECK(e.subtree() == "mult");
  }
  CHECK_THROWS_AS(evaluate_word(f, GeneratorWord::compose_of({})), WordError);

  FrobeniusDatum not_frob = two_element_family(0, 0, TwoElementAlpha::id).datum;
  CHECK_THROWS_AS(evaluate_word(not_frob, leaf(Kind::mult)), PreconditionError);
  CHECK_THROWS_AS(transfer_matrix(not_frob), PreconditionError);
  CHECK_THROWS_AS(partition_function(not_frob, 1), PreconditionError);
}
