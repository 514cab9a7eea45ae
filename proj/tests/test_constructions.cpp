#include <doctest.h>

#include <numeric>
#include <random>

#include "linlay/bounds.hpp"
#include "linlay/constructions.hpp"
#include "linlay/verify.hpp"

using namespace linlay;

TEST_CASE("zig-zag stack layouts of K_n") {
    SUBCASE("n=4: two pages, all six edges") {
        LinearLayout l = stack_layout_kn(4);
        CHECK(l.pages.size() == 2);
        CHECK(l.total_edges() == 6);
        CHECK(validate_layout(l).valid());
    }
    SUBCASE("n=2: a single page with one edge") {
        LinearLayout l = stack_layout_kn(2);
        CHECK(l.pages.size() == 1);
        CHECK(l.total_edges() == 1);
        CHECK(validate_layout(l).valid());
    }
    SUBCASE("n=10: five pages, 45 edges") {
        LinearLayout l = stack_layout_kn(10);
        CHECK(l.pages.size() == 5);
        CHECK(l.total_edges() == 45);
        CHECK(validate_layout(l).valid());
    }
    SUBCASE("odd sizes keep ceil(n/2) pages") {
        for (int n : {3, 5, 7, 9, 11}) {
            LinearLayout l = stack_layout_kn(n);
            CHECK(static_cast<int>(l.pages.size()) == (n + 1) / 2);
            CHECK(l.total_edges() == static_cast<std::size_t>(n) * (n - 1) / 2);
            CHECK(validate_layout(l).valid());
        }
    }
    CHECK_THROWS_AS(stack_layout_kn(1), std::invalid_argument);
}

TEST_CASE("merging stacks into deques") {
    SUBCASE("two stacks of K4 fold into one deque") {
        LinearLayout merged = merge_stacks_to_deques(stack_layout_kn(4));
        CHECK(merged.pages.size() == 1);
        CHECK(merged.kind == LayoutKind::Deque);
        CHECK(validate_layout(merged).valid());
    }
    SUBCASE("a single stack stays one all-hh deque") {
        LinearLayout stacks = stack_layout_kn(2);
        LinearLayout merged = merge_stacks_to_deques(stacks);
        CHECK(merged.pages.size() == 1);
        for (const TypedEdge& e : merged.pages[0].edges) CHECK(e.type == EdgeType::HH);
    }
    SUBCASE("K9: five stacks become three deques") {
        LinearLayout merged = merge_stacks_to_deques(stack_layout_kn(9));
        CHECK(merged.pages.size() == 3);
        CHECK(validate_layout(merged).valid());
    }
    SUBCASE("merging demands a stack layout") {
        LinearLayout merged = merge_stacks_to_deques(stack_layout_kn(4));
        CHECK_THROWS_AS(merge_stacks_to_deques(merged), std::invalid_argument);
    }
    SUBCASE("merging any valid stack layout keeps validity") {
        // random orders and greedy first-fit stacks
        std::mt19937 rng(11);
        for (int iter = 0; iter < 25; ++iter) {
            int n = 4 + static_cast<int>(rng() % 6);
            std::vector<int> seq(n);
            std::iota(seq.begin(), seq.end(), 0);
            std::shuffle(seq.begin(), seq.end(), rng);
            VertexOrder order(seq);
            Graph g = Graph::complete(n);
            std::vector<Page> pages;
            for (const Edge& e : g.edges()) {
                bool placed = false;
                for (Page& pg : pages) {
                    TypedEdge cand(e, EdgeType::HH);
                    bool ok = true;
                    for (const TypedEdge& o : pg.edges)
                        if (typed_edges_conflict(order, cand, o)) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        pg.edges.push_back(cand);
                        placed = true;
                        break;
                    }
                }
                if (!placed) pages.push_back(Page{{TypedEdge(e, EdgeType::HH)}});
            }
            LinearLayout stacks{g, order, std::move(pages), LayoutKind::Stack};
            REQUIRE(validate_layout(stacks).valid());
            LinearLayout merged = merge_stacks_to_deques(stacks);
            CHECK(merged.pages.size() == (stacks.pages.size() + 1) / 2);
            CHECK(validate_layout(merged).valid());
        }
    }
}

TEST_CASE("deque layouts of K_n hit ceil(n/4) pages") {
    CHECK(deque_layout_kn(4).pages.size() == 1);
    CHECK(deque_layout_kn(8).pages.size() == 2);
    LinearLayout k30 = deque_layout_kn(30);
    CHECK(k30.pages.size() == 8);
    CHECK(k30.total_edges() == 435);
    CHECK(validate_layout(k30).valid());
    CHECK_THROWS_AS(deque_layout_kn(1), std::invalid_argument);
}

TEST_CASE("rique layouts of K_n") {
    SUBCASE("page counts at the three congruence classes") {
        CHECK(rique_layout_kn(30).pages.size() == 9);
        CHECK(rique_layout_kn(28).pages.size() == 9);
        CHECK(rique_layout_kn(29).pages.size() == 9);
    }
    SUBCASE("layouts validate with an exact partition") {
        for (int n : {10, 21, 22, 28, 29, 30, 31}) {
            LinearLayout l = rique_layout_kn(n);
            CAPTURE(n);
            CHECK(l.total_edges() == static_cast<std::size_t>(n) * (n - 1) / 2);
            CHECK(validate_layout(l).valid());
            CHECK(static_cast<int>(l.pages.size()) == std::max(1, (n - 1) / 3));
        }
    }
    SUBCASE("per-page counts for n % 3 == 1 follow the published formulas") {
        LinearLayout l = rique_layout_kn(28);
        const int n = 28, m = 9;
        REQUIRE(l.pages.size() == static_cast<std::size_t>(m));
        CHECK(l.pages[0].edges.size() == static_cast<std::size_t>(2 * n - 1));
        CHECK(l.pages[1].edges.size() == static_cast<std::size_t>(2 * n - 4));
        for (int p = 3; p <= m - 1; ++p)
            CHECK(l.pages[p - 1].edges.size() == static_cast<std::size_t>(2 * n - 3 * p + 2));
        CHECK(l.pages[m - 1].edges.size() == static_cast<std::size_t>(2 * (n - 1) / 3 + 4));
    }
    SUBCASE("sizes outside the supported windows point at the SAT route") {
        CHECK_THROWS_AS(rique_layout_kn(7), UnsupportedSizeError);
        CHECK_THROWS_AS(rique_layout_kn(18), UnsupportedSizeError);
        CHECK_THROWS_AS(rique_layout_kn(33), UnsupportedSizeError);
        CHECK_THROWS_AS(rique_layout_kn(17), UnsupportedSizeError);
        CHECK_NOTHROW(rique_layout_kn(kRiqueKnMinMod1));
        CHECK_NOTHROW(rique_layout_kn(kRiqueKnMinMod0));
        CHECK_NOTHROW(rique_layout_kn(kRiqueKnMinMod2));
        CHECK_NOTHROW(rique_layout_kn(kRiqueKnMaxMod0));
    }
}

TEST_CASE("bipartite labels map parts to id blocks") {
    BipartiteLabels L(5);
    CHECK(L.a(1) == 0);
    CHECK(L.a(5) == 4);
    CHECK(L.b(1) == 5);
    CHECK(L.b(5) == 9);
}

TEST_CASE("deque layouts of K_{n,n}") {
    SUBCASE("n divisible by three") {
        for (int n : {39, 42}) {
            LinearLayout l = deque_layout_knn(n);
            CAPTURE(n);
            CHECK(static_cast<int>(l.pages.size()) == n / 3);
            CHECK(l.total_edges() == static_cast<std::size_t>(n) * n);
            CHECK(validate_layout(l).valid());
        }
    }
    SUBCASE("padding covers the other residues without extra pages") {
        LinearLayout l = deque_layout_knn(40);
        CHECK(l.pages.size() == 14);  // ceil(40/3)
        CHECK(l.total_edges() == 1600);
        CHECK(validate_layout(l).valid());
    }
    SUBCASE("all four edge categories appear") {
        LinearLayout l = deque_layout_knn(39);
        bool seen[4] = {false, false, false, false};
        for (const Page& p : l.pages)
            for (const TypedEdge& e : p.edges) seen[static_cast<int>(e.type)] = true;
        CHECK(seen[0]);
        CHECK(seen[1]);
        CHECK(seen[2]);
        CHECK(seen[3]);
    }
    CHECK_THROWS_AS(deque_layout_knn(12), UnsupportedSizeError);
}

TEST_CASE("rique layouts of K_{n,n}") {
    SUBCASE("odd and even cases") {
        LinearLayout odd = rique_layout_knn(29);
        CHECK(odd.pages.size() == 13);
        CHECK(odd.total_edges() == 841);
        CHECK(validate_layout(odd).valid());
        CHECK(odd.pages[0].edges.size() == 87);  // 3n, as published

        LinearLayout even = rique_layout_knn(30);
        CHECK(even.pages.size() == 13);  // n/2 - 2
        CHECK(even.total_edges() == 900);
        CHECK(validate_layout(even).valid());
        CHECK(even.pages[0].edges.size() == 91);  // 3n + 1, as published
    }
    SUBCASE("only hh and ht edges are used") {
        LinearLayout l = rique_layout_knn(27);
        for (const Page& p : l.pages)
            for (const TypedEdge& e : p.edges)
                CHECK((e.type == EdgeType::HH || e.type == EdgeType::HT));
    }
    CHECK_THROWS_AS(rique_layout_knn(20), UnsupportedSizeError);
}

TEST_CASE("restricting a K_6 deque layout to its first five spine vertices") {
    LinearLayout k6 = deque_layout_kn(6);
    std::vector<int> keep(k6.order.sequence().begin(), k6.order.sequence().begin() + 5);
    LinearLayout k5 = induced_sublayout(k6, keep);
    CHECK(k5.graph.num_vertices() == 5);
    CHECK(k5.total_edges() == 10);
    CHECK(k5.pages.size() == k6.pages.size());
    CHECK(validate_layout(k5).valid());
}

TEST_CASE("generator outputs satisfy the density upper bounds") {
    // sanity direction: a valid k-page layout can never exceed max_edges
    for (int n : {24, 30}) {
        LinearLayout l = rique_layout_kn(n);
        CHECK(static_cast<std::int64_t>(l.total_edges()) <=
              max_edges_rique(n, static_cast<std::int64_t>(l.pages.size())));
    }
    LinearLayout d = deque_layout_kn(20);
    CHECK(static_cast<std::int64_t>(d.total_edges()) <=
          max_edges_deque(20, static_cast<std::int64_t>(d.pages.size())));
}
