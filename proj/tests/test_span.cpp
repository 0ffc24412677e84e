#include <doctest.h>

#include "frobspan/span.hpp"
#include "helpers.hpp"

using namespace frobspan;
using namespace frobspan::testing;

TEST_CASE("pair labels split unambiguously, including hostile characters") {
  auto roundtrip = [](const std::string& a, const std::string& b) {
    auto parts = split_pair_label(pair_label(a, b));
    REQUIRE(parts.has_value());
    CHECK(parts->first == a);
    CHECK(parts->second == b);
  };
  roundtrip("a", "b");
  roundtrip("a|b", "c");
  roundtrip("(a", "b)");
  roundtrip("a\\", "|");
  roundtrip("", "");
  CHECK_FALSE(split_pair_label("plain").has_value());
  CHECK_FALSE(split_pair_label("(nobar)").has_value());
}

TEST_CASE("finite sets are canonically sorted and reject duplicates") {
  FiniteSet s({"b", "a", "c"});
  CHECK(s.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK_THROWS_AS(FiniteSet({"a", "a"}), ParseError);
  CHECK(FiniteSet().empty());
}

TEST_CASE("identity span") {
  FiniteSet x({"a", "b"});
  Span id = identity_span(x);
  CHECK(is_isomorphism_span(id));
  MultiplicityMatrix m = span_to_matrix(id);
  CHECK(m == MultiplicityMatrix::identity(x));

  Span id1 = identity_span(FiniteSet({"a"}));
  CHECK(id1.apex.size() == 1);

  Span id0 = identity_span(FiniteSet());
  CHECK(id0.apex.empty());
  CHECK(span_to_matrix(id0).counts().rows() == 0);
}

TEST_CASE("composition with identities and an enumerated pullback") {
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    FiniteSet x = random_set(rng, "a", 4, 1);
    FiniteSet y = random_set(rng, "b", 4, 1);
    Span s = random_span(rng, x, y, 5);
    CHECK(spans_isomorphic(compose_spans(identity_span(x), s), s));
    CHECK(spans_isomorphic(compose_spans(s, identity_span(y)), s));
  }

  // f = ({x} <- {a1,a2} -> {y}), g = ({y} <- {b1} -> {z}): two pullback pairs.
  FiniteSet X({"x"}), Y({"y"}), Z({"z"}), A({"a1", "a2"}), B({"b1"});
  Span f(X, Y, A, SetMap::constant(A, X, "x"), SetMap::constant(A, Y, "y"));
  Span g(Y, Z, B, SetMap::constant(B, Y, "y"), SetMap::constant(B, Z, "z"));
  Span fg = compose_spans(f, g);
  CHECK(fg.apex.size() == 2);
  CHECK(fg.apex.contains("(a1|b1)"));
  CHECK(fg.apex.contains("(a2|b1)"));
  CHECK_THROWS_AS(compose_spans(g, f), ComposeError);
}

TEST_CASE("matrix of a composite is the matrix product, against brute force") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    FiniteSet x = random_set(rng, "a", 4);
    FiniteSet y = random_set(rng, "b", 4);
    FiniteSet z = random_set(rng, "c", 4);
    Span f = random_span(rng, x, y, 6);
    Span g = random_span(rng, y, z, 6);
    MultiplicityMatrix composed = span_to_matrix(compose_spans(f, g));
    CHECK(composed == span_to_matrix(f).multiply(span_to_matrix(g)));
    CHECK(composed == oracle_compose_matrix(f, g));
  }
}

TEST_CASE("composition is associative at the matrix level") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    FiniteSet w = random_set(rng, "a", 3);
    FiniteSet x = random_set(rng, "b", 3);
    FiniteSet y = random_set(rng, "c", 3);
    FiniteSet z = random_set(rng, "d", 3);
    Span f = random_span(rng, w, x, 4);
    Span g = random_span(rng, x, y, 4);
    Span h = random_span(rng, y, z, 4);
    Span left = compose_spans(compose_spans(f, g), h);
    Span right = compose_spans(f, compose_spans(g, h));
    CHECK(spans_isomorphic(left, right));
  }
}

TEST_CASE("tensor: cardinalities, identity, Kronecker functoriality") {
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    FiniteSet x = random_set(rng, "a", 3);
    FiniteSet y = random_set(rng, "b", 3);
    Span f = random_span(rng, x, y, 4);
    FiniteSet w = random_set(rng, "c", 3);
    FiniteSet z = random_set(rng, "d", 3);
    Span g = random_span(rng, w, z, 4);
    Span t = tensor_spans(f, g);
    CHECK(t.apex.size() == f.apex.size() * g.apex.size());
    CHECK(span_to_matrix(t) == span_to_matrix(f).kronecker(span_to_matrix(g)));
  }
  FiniteSet x({"a", "b"}), y({"p"});
  CHECK(spans_isomorphic(tensor_spans(identity_span(x), identity_span(y)),
                         identity_span(product(x, y))));
}

TEST_CASE("slide move: the two orders of a monoidal product agree") {
  std::mt19937 rng(19);
  for (int i = 0; i < 50; ++i) {
    FiniteSet x = random_set(rng, "a", 3, 1);
    FiniteSet y = random_set(rng, "b", 3, 1);
    FiniteSet w = random_set(rng, "c", 3, 1);
    FiniteSet z = random_set(rng, "d", 3, 1);
    Span alpha = random_span(rng, x, y, 4);
    Span beta = random_span(rng, w, z, 4);
    Span first = compose_spans(tensor_spans(alpha, identity_span(w)),
                               tensor_spans(identity_span(y), beta));
    Span second = compose_spans(tensor_spans(identity_span(x), beta),
                                tensor_spans(alpha, identity_span(z)));
    CHECK(spans_isomorphic(first, second));
    CHECK(spans_isomorphic(first, tensor_spans(alpha, beta)));
  }
}

TEST_CASE("spans_isomorphic is blind to apex relabeling and sensitive to counts") {
  FiniteSet x({"a", "b"});
  Span id = identity_span(x);
  FiniteSet apex({"p", "q"});
  Span relabeled(x, x, apex,
                 SetMap(apex, x, std::map<std::string, std::string>{{"p", "a"}, {"q", "b"}}),
                 SetMap(apex, x, std::map<std::string, std::string>{{"p", "a"}, {"q", "b"}}));
  CHECK(spans_isomorphic(id, relabeled));

  FiniteSet bigger({"p", "q", "r"});
  Span extra(x, x, bigger,
             SetMap(bigger, x,
                    std::map<std::string, std::string>{{"p", "a"}, {"q", "b"}, {"r", "a"}}),
             SetMap(bigger, x,
                    std::map<std::string, std::string>{{"p", "a"}, {"q", "b"}, {"r", "a"}}));
  CHECK_FALSE(spans_isomorphic(id, extra));
}

TEST_CASE("isomorphism spans are exactly those with bijective legs") {
  FiniteSet x({"a", "b"});
  CHECK(is_isomorphism_span(identity_span(x)));
  FiniteSet small({"p"});
  Span squash(x, x, small, SetMap::constant(small, x, "a"), SetMap::constant(small, x, "a"));
  CHECK_FALSE(is_isomorphism_span(squash));
}

TEST_CASE("twist span: involution, permutation matrix, trivial on a point") {
  FiniteSet x({"a", "b"});
  Span tw = twist_span(x);
  CHECK(spans_isomorphic(compose_spans(tw, tw), identity_span(product(x, x))));
  MultiplicityMatrix m = span_to_matrix(tw);
  CHECK(m.at(pair_label("b", "a"), pair_label("a", "b")) == 1);
  CHECK(m.at(pair_label("a", "b"), pair_label("a", "b")) == 0);
  CHECK(m.at(pair_label("a", "a"), pair_label("a", "a")) == 1);

  FiniteSet one({"p"});
  CHECK(spans_isomorphic(twist_span(one), identity_span(product(one, one))));
}

TEST_CASE("empty apexes and empty sets flow through every operation") {
  FiniteSet x({"a", "b"}), empty;
  Span zero(x, x, empty, SetMap(empty, x, std::vector<std::size_t>{}),
            SetMap(empty, x, std::vector<std::size_t>{}));
  CHECK(span_to_matrix(zero).counts().is_zero());
  Span composed = compose_spans(zero, identity_span(x));
  CHECK(composed.apex.empty());
  Span t = tensor_spans(zero, identity_span(x));
  CHECK(t.apex.empty());
}

TEST_CASE("unitor and associator spans are isomorphisms of the right shape") {
  FiniteSet x({"a", "b"}), y({"c"}), z({"d", "e"});
  CHECK(is_isomorphism_span(left_unitor_span(x)));
  CHECK(is_isomorphism_span(right_unitor_span(x)));
  Span assoc = associator_span(x, y, z);
  CHECK(is_isomorphism_span(assoc));
  CHECK(assoc.src == product(product(x, y), z));
  CHECK(assoc.dst == product(x, product(y, z)));
}
