#include <doctest.h>

#include "test_support.hpp"

using namespace cpih;
using namespace cpih::testutil;

TEST_CASE("convex hull of the spec'd small sets") {
    const ConvexPolygon tri = convex_hull({{0, 0}, {1, 0}, {0, 1}});
    CHECK(vertex_sets_match(tri, {{0, 0}, {1, 0}, {0, 1}}, 1e-12));

    const ConvexPolygon with_interior =
        convex_hull({{0, 0}, {2, 0}, {1, 1}, {1, 0.2}});
    CHECK(vertex_sets_match(with_interior, {{0, 0}, {2, 0}, {1, 1}}, 1e-12));

    const ConvexPolygon seg = convex_hull({{0, 0}, {1, 1}, {2, 2}});
    CHECK(seg.is_segment());
    CHECK(vertex_sets_match(seg, {{0, 0}, {2, 2}}, 1e-12));

    CHECK_THROWS_WITH_AS(convex_hull({}), "empty point set", std::invalid_argument);

    const ConvexPolygon pt = convex_hull({{3, 4}, {3, 4}});
    CHECK(pt.is_point());
}

TEST_CASE("convex hull is idempotent on random point sets") {
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        const PointList pts = random_points(rng, 3 + it % 20, -5.0, 5.0);
        const ConvexPolygon h1 = convex_hull(pts);
        const ConvexPolygon h2 = convex_hull(h1.vertices());
        REQUIRE(h1.size() == h2.size());
        for (std::size_t i = 0; i < h1.size(); ++i)
            CHECK(h1.vertices()[i] == h2.vertices()[i]);
    }
}

TEST_CASE("clipping the unit square") {
    const ConvexPolygon square = box_polygon(0, 0, 1, 1);
    const Halfplane half_x = Halfplane::from_normal({1, 0}, 0.5);

    const ConvexPolygon left = clip(square, half_x);
    CHECK(vertex_sets_match(left, {{0, 0}, {0.5, 0}, {0.5, 1}, {0, 1}}, 1e-12));

    CHECK(clip(square, Halfplane::from_normal({1, 0}, -1.0)).empty());

    const ConvexPolygon unchanged = clip(square, Halfplane::from_normal({1, 0}, 2.0));
    CHECK(vertex_sets_match(unchanged, square.vertices(), 1e-12));
}

TEST_CASE("clip stays inside both the polygon and the halfplane") {
    Rng rng(23);
    for (int it = 0; it < 100; ++it) {
        const ConvexPolygon poly = convex_hull(random_points(rng, 6, -5.0, 5.0));
        const double theta = rng.uniform(0.0, 2.0 * M_PI);
        const Halfplane h = Halfplane::from_normal(
            {std::cos(theta), std::sin(theta)}, rng.uniform(-3.0, 3.0));
        const ConvexPolygon cut = clip(poly, h);
        for (const Point& v : cut.vertices()) {
            CHECK(poly.contains(v, 1e-9));
            CHECK(h.contains(v, 1e-9));
        }
    }
}

TEST_CASE("polygon intersection basics") {
    const ConvexPolygon unit = box_polygon(0, 0, 1, 1);
    CHECK(vertex_sets_match(intersect(unit, unit), unit.vertices(), 1e-12));

    const ConvexPolygon shifted = box_polygon(0.5, 0.5, 1.5, 1.5);
    CHECK(vertex_sets_match(intersect(unit, shifted),
                            {{0.5, 0.5}, {1, 0.5}, {1, 1}, {0.5, 1}}, 1e-12));

    const ConvexPolygon far = box_polygon(2, 2, 3, 3);
    CHECK(intersect(unit, far).empty());
}

TEST_CASE("intersection is commutative and contained in both") {
    Rng rng(37);
    for (int it = 0; it < 100; ++it) {
        const ConvexPolygon a = convex_hull(random_points(rng, 5, -4.0, 4.0));
        const ConvexPolygon b = convex_hull(random_points(rng, 5, -4.0, 4.0));
        const ConvexPolygon ab = intersect(a, b);
        const ConvexPolygon ba = intersect(b, a);
        CHECK(symmetric_difference_area(ab, ba) <= 1e-9);
        for (const Point& v : ab.vertices()) {
            CHECK(a.contains(v, 1e-9));
            CHECK(b.contains(v, 1e-9));
        }
    }
}

TEST_CASE("support queries") {
    CHECK(support(ConvexRegion::square({0, 0}, 0.5), {1, 0}) == doctest::Approx(0.5));
    CHECK(support(ConvexRegion::disk({1, 0}, 2.0), {1, 0}) == doctest::Approx(3.0));
    CHECK(support(ConvexRegion::point({3, 4}), {0, 1}) == doctest::Approx(4.0));

    // region is in {dot(n,p) <= c} iff support(region, n) <= c
    const ConvexRegion sq = ConvexRegion::square({2, 1}, 0.5);
    CHECK(region_in_halfplane(sq, Halfplane::from_normal({1, 0}, 2.5)));
    CHECK_FALSE(region_in_halfplane(sq, Halfplane::from_normal({1, 0}, 2.4)));
}

TEST_CASE("separating tangent of mirrored squares") {
    const ConvexRegion a = ConvexRegion::square({0, 0}, 0.5);
    const ConvexRegion b = ConvexRegion::square({10, 0}, 0.5);
    const ConvexRegion other = ConvexRegion::square({5, 8}, 0.5);
    const auto h = separating_tangent(a, b, other);
    REQUIRE(h.has_value());
    // line y = 0.5 with inner side {y >= 0.5}
    CHECK(h->normal.x() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(h->normal.y() == doctest::Approx(-1.0));
    CHECK(h->offset == doctest::Approx(-0.5));
}

TEST_CASE("separating tangent of degenerate point regions") {
    const auto h = separating_tangent(ConvexRegion::point({0, 0}),
                                      ConvexRegion::point({4, 0}),
                                      ConvexRegion::point({2, 3}));
    REQUIRE(h.has_value());
    CHECK(h->normal.y() == doctest::Approx(-1.0));
    CHECK(h->offset == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("no separating tangent when the third region meets the pair hull") {
    const ConvexRegion a = ConvexRegion::square({0, 0}, 0.5);
    const ConvexRegion b = ConvexRegion::square({0, 0}, 0.5);
    const ConvexRegion other = ConvexRegion::square({0.2, 0.1}, 0.5);
    CHECK_FALSE(separating_tangent(a, b, other).has_value());
}

TEST_CASE("tangent invariants over random region pairs") {
    Rng rng(51);
    int found = 0;
    for (int it = 0; it < 200; ++it) {
        const RegionFamily fam = random_family(rng, 3, 8.0);
        const auto h =
            separating_tangent(fam.region(0), fam.region(1), fam.region(2));
        if (!h) continue;
        ++found;
        const Point n = h->normal;
        const double c = h->offset;
        CHECK(support(fam.region(0), -n) <= -c + 1e-9);
        CHECK(support(fam.region(1), -n) <= -c + 1e-9);
        CHECK(support(fam.region(2), n) <= c + 1e-9);
        // tangency: both pair members touch the line
        CHECK(support(fam.region(0), -n) >= -c - 1e-9);
        CHECK(support(fam.region(1), -n) >= -c - 1e-9);
    }
    CHECK(found > 150);  // spread families almost always admit the tangent
}

TEST_CASE("degenerate polygons are usable values") {
    const ConvexPolygon seg = convex_hull({{0, 0}, {2, 0}});
    CHECK(clip(seg, Halfplane::from_normal({1, 0}, 1.0)).is_segment());
    CHECK(clip(seg, Halfplane::from_normal({1, 0}, -1.0)).empty());
    CHECK(intersect(seg, box_polygon(0.5, -1, 3, 1)).is_segment());

    const ConvexPolygon pt = convex_hull({{1, 1}});
    CHECK(intersect(pt, box_polygon(0, 0, 2, 2)).is_point());
    CHECK(intersect(pt, box_polygon(3, 3, 4, 4)).empty());
}

TEST_CASE("distance and hausdorff helpers") {
    const ConvexPolygon unit = box_polygon(0, 0, 1, 1);
    CHECK(distance_to(unit, {0.5, 0.5}) == 0.0);
    CHECK(distance_to(unit, {2.0, 0.5}) == doctest::Approx(1.0));
    const ConvexPolygon bigger = box_polygon(0, 0, 2, 1);
    CHECK(hausdorff_distance(unit, bigger) == doctest::Approx(1.0));
    CHECK(symmetric_difference_area(unit, bigger) == doctest::Approx(1.0));
}
