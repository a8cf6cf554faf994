#include "rotlab/figures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rotlab {

namespace {

GroupLetter pos(Gen x) { return {x, 1}; }
GroupLetter neg(Gen x) { return {x, -1}; }

GroupWord word(std::vector<GroupLetter> ls) { return GroupWord(std::move(ls)); }

// A B A^-1 B^-1
GroupWord comm_relator(const GroupWord& a, const GroupWord& b) {
    return a.concat(b).concat(a.inverse()).concat(b.inverse());
}

GroupWord gens_product(GenKind kind, int hi, int lo) { // x_hi ... x_lo
    std::vector<GroupLetter> ls;
    for (int i = hi; i >= lo; --i) ls.push_back(pos(Gen(kind, uint16_t(i))));
    return word(std::move(ls));
}

// ---------------------------------------------------------------------------
// planar wiring region: sort `path` into `target` by adjacent swaps, one
// rhombus face per swap; old edges are traversed +, new edges -.

struct CapTiler {
    DehnDiagram& d;
    std::vector<int> verts;  // vertex ids along the current path
    std::vector<int> edges;  // edge ids along the path (all directed forward)
    std::vector<Gen> labels;

    // target rank per label (labels within one cap are distinct)
    std::map<uint32_t, size_t> rank;

    void run(const std::vector<Gen>& target_labels, const std::vector<int>& target_edges,
             const std::vector<int>& target_interior_verts) {
        for (size_t i = 0; i < target_labels.size(); ++i)
            rank.emplace(target_labels[i].code(), i);
        bool swapped = true;
        while (swapped) {
            swapped = false;
            for (size_t i = 0; i + 1 < labels.size(); ++i) {
                if (rank.at(labels[i].code()) <= rank.at(labels[i + 1].code())) continue;
                swap_at(i);
                swapped = true;
            }
        }
        // the sorted path now spells the target word; identify it
        if (labels.size() != target_labels.size())
            throw std::logic_error("cap tiling: length mismatch");
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] != target_labels[i]) throw std::logic_error("cap tiling: word mismatch");
        std::map<int, int> emap, vmap;
        for (size_t i = 0; i < edges.size(); ++i) emap[edges[i]] = target_edges[i];
        for (size_t i = 0; i + 2 <= verts.size(); ++i)
            if (i >= 1) vmap[verts[i]] = target_interior_verts[i - 1];
        remap(emap, vmap);
    }

    void swap_at(size_t i) {
        int u = verts[i], w = verts[i + 1], zz = verts[i + 2];
        int e1 = edges[i], e2 = edges[i + 1];
        Gen l1 = labels[i], l2 = labels[i + 1];
        int w2 = d.add_vertex();
        int n1 = d.add_edge(u, w2, l2);
        int n2 = d.add_edge(w2, zz, l1);
        d.bounded_faces.push_back({{e1, 1}, {e2, 1}, {n2, -1}, {n1, -1}});
        (void)w;
        verts[i + 1] = w2;
        edges[i] = n1;
        edges[i + 1] = n2;
        std::swap(labels[i], labels[i + 1]);
    }

    // rewrite ids of the fresh final path onto the pre-existing target ids
    void remap(const std::map<int, int>& emap, const std::map<int, int>& vmap) {
        for (FaceWalk& f : d.bounded_faces)
            for (FaceStep& st : f) {
                auto it = emap.find(st.edge);
                if (it != emap.end()) st.edge = it->second;
            }
        for (auto [from, to] : emap)
            if (from < int(d.edges.size())) d.edges[size_t(from)] = {-1, -1, Gen()};
        for (DehnEdge& e : d.edges) {
            auto iu = vmap.find(e.from);
            if (iu != vmap.end()) e.from = iu->second;
            auto iv = vmap.find(e.to);
            if (iv != vmap.end()) e.to = iv->second;
        }
    }
};

// Dead edges (tombstoned by the tiler) are compacted away at the end.
void compact(DehnDiagram& d) {
    std::map<int, int> emap;
    std::vector<DehnEdge> kept;
    for (int e = 0; e < int(d.edges.size()); ++e) {
        if (d.edges[size_t(e)].from < 0) continue;
        emap[e] = int(kept.size());
        kept.push_back(d.edges[size_t(e)]);
    }
    d.edges = std::move(kept);
    auto fix = [&](FaceWalk& f) {
        for (FaceStep& st : f) st.edge = emap.at(st.edge);
    };
    for (FaceWalk& f : d.bounded_faces) fix(f);
    fix(d.outer_face);
    // vertices may have holes too; renumber
    std::map<int, int> vmap;
    for (const DehnEdge& e : d.edges) {
        if (!vmap.count(e.from)) vmap[e.from] = int(vmap.size());
        if (!vmap.count(e.to)) vmap[e.to] = int(vmap.size());
    }
    for (DehnEdge& e : d.edges) {
        e.from = vmap.at(e.from);
        e.to = vmap.at(e.to);
    }
    d.vertex_count = int(vmap.size());
}

void name_letters(DehnDiagram& d, std::initializer_list<std::pair<Gen, const char*>> names) {
    for (auto& [x, nm] : names) d.label_names.emplace(x.code(), nm);
}

} // namespace

// ---------------------------------------------------------------------------

Figure figure_1() {
    // labels: a,b,c = g1,g2,g3 and A,B,C = h1,h2,h3
    Gen a = g(1), b = g(2), c = g(3), A = h(1), B = h(2), C = h(3);
    DehnDiagram d;
    d.name = "figure1";
    name_letters(d, {{a, "a"}, {b, "b"}, {c, "c"}, {A, "A"}, {B, "B"}, {C, "C"}});
    for (int i = 0; i < 16; ++i) d.add_vertex();
    enum { P0, T1, T2, T3, TR1, TR2, P1, D1, D2, D3, BR1, BR2, M, U, L, W };
    int e0 = d.add_edge(P0, T1, c), e1 = d.add_edge(T1, T2, b), e2 = d.add_edge(T2, T3, a);
    int e3 = d.add_edge(T3, TR1, C), e4 = d.add_edge(TR1, TR2, B), e5 = d.add_edge(TR2, P1, A);
    int e6 = d.add_edge(P0, D1, C), e7 = d.add_edge(D1, D2, B), e8 = d.add_edge(D2, D3, A);
    int e9 = d.add_edge(D3, BR1, c), e10 = d.add_edge(BR1, BR2, b), e11 = d.add_edge(BR2, P1, a);
    int e12 = d.add_edge(U, M, B), e13 = d.add_edge(L, M, b), e14 = d.add_edge(W, U, b);
    int e15 = d.add_edge(W, L, B), e16 = d.add_edge(T2, U, C), e17 = d.add_edge(D2, L, c);
    int e18 = d.add_edge(U, TR1, a), e19 = d.add_edge(L, BR1, A);
    d.bounded_faces = {
        {{e16, 1}, {e18, 1}, {e3, -1}, {e2, -1}},                                   // [a,C]
        {{e8, 1}, {e9, 1}, {e19, -1}, {e17, -1}},                                   // [c,A]
        {{e13, -1}, {e15, -1}, {e14, 1}, {e12, 1}},                                 // [b,B]
        {{e6, 1}, {e7, 1}, {e17, 1}, {e13, 1}, {e12, -1}, {e16, -1}, {e1, -1}, {e0, -1}}, // cbCB
        {{e14, -1}, {e15, 1}, {e19, 1}, {e10, 1}, {e11, 1}, {e5, -1}, {e4, -1}, {e18, -1}}, // baBA
    };
    d.outer_face = {{e0, 1},  {e1, 1},  {e2, 1},  {e3, 1},  {e4, 1},  {e5, 1},
                    {e11, -1}, {e10, -1}, {e9, -1}, {e8, -1}, {e7, -1}, {e6, -1}};

    Figure fig;
    fig.diagram = std::move(d);
    fig.relators = {
        comm_relator(word({pos(a)}), word({pos(C)})),
        comm_relator(word({pos(b)}), word({pos(B)})),
        comm_relator(word({pos(c)}), word({pos(A)})),
        comm_relator(word({pos(b), pos(a)}), word({pos(B), pos(A)})),
        comm_relator(word({pos(c), pos(b)}), word({pos(C), pos(B)})),
    };
    fig.expected_outer =
        comm_relator(word({pos(c), pos(b), pos(a)}), word({pos(C), pos(B), pos(A)}));
    return fig;
}

Figure figure_3() {
    // labels: p,q,r,s = g1..g4 and P,Q,R,S = h1..h4
    Gen p = g(1), q = g(2), r = g(3), s = g(4), P = h(1), Q = h(2), R = h(3), S = h(4);
    DehnDiagram d;
    d.name = "figure3";
    name_letters(d, {{p, "p"}, {q, "q"}, {r, "r"}, {s, "s"},
                     {P, "P"}, {Q, "Q"}, {R, "R"}, {S, "S"}});
    for (int i = 0; i < 6; ++i) d.add_vertex();
    enum { Lv, M1, M2, Rv, T, Bm };
    int e0 = d.add_edge(Lv, T, P), e1 = d.add_edge(T, M1, Q), e2 = d.add_edge(M2, T, R);
    int e3 = d.add_edge(T, Rv, S), e4 = d.add_edge(Lv, Bm, p), e5 = d.add_edge(Bm, M1, q);
    int e6 = d.add_edge(M2, Bm, r), e7 = d.add_edge(Bm, Rv, s);
    d.bounded_faces = {
        {{e0, 1}, {e1, 1}, {e5, -1}, {e4, -1}}, // PQ = pq
        {{e1, -1}, {e2, -1}, {e6, 1}, {e5, 1}}, // RQ = rq
        {{e3, 1}, {e7, -1}, {e6, -1}, {e2, 1}}, // RS = rs
    };
    d.outer_face = {{e4, 1}, {e7, 1}, {e3, -1}, {e0, -1}};

    Figure fig;
    fig.diagram = std::move(d);
    auto rel = [&](Gen X, Gen Y, Gen x, Gen y) { // XY = xy
        return word({pos(X), pos(Y), neg(y), neg(x)});
    };
    fig.relators = {rel(P, Q, p, q), rel(R, Q, r, q), rel(R, S, r, s)};
    fig.expected_outer = rel(P, S, p, s);
    return fig;
}

Figure figure_4() {
    Gen ga = g(1), gb = g(2), gc = g(3), ha = h(1), hb = h(2), hc = h(3);
    DehnDiagram d;
    d.name = "figure4";
    name_letters(d, {{ga, "g_a"}, {gb, "g_b"}, {gc, "g_c"},
                     {ha, "h_a"}, {hb, "h_b"}, {hc, "h_c"}});
    for (int i = 0; i < 24; ++i) d.add_vertex();
    enum { vb0, va0, v00, v10, v20, vb1, v21, vb2, va2, v02, v12, v22,
           vb3, va3, v13, v23, v04, v40, v41, v42, vd0, vd1, vd2, vc1 };
    int e0 = d.add_edge(v00, v10, gc), e1 = d.add_edge(v20, v10, ha);
    int e2 = d.add_edge(va0, vb0, gc), e3 = d.add_edge(va0, v00, ha);
    int e4 = d.add_edge(v02, v12, gc), e5 = d.add_edge(v22, v12, ha);
    int e6 = d.add_edge(va2, vb2, gc), e7 = d.add_edge(va2, v02, ha);
    int e8 = d.add_edge(v23, v13, ha), e9 = d.add_edge(va3, vb3, gc);
    int e10 = d.add_edge(vb1, vb0, hb), e11 = d.add_edge(v21, v20, hb);
    int e12 = d.add_edge(vb1, vb2, gb), e13 = d.add_edge(v21, v22, gb);
    int e14 = d.add_edge(vb3, vb2, hc), e15 = d.add_edge(va3, va2, hc);
    int e16 = d.add_edge(v12, v13, ga), e17 = d.add_edge(v22, v23, ga);
    int e18 = d.add_edge(vb3, v04, ga), e19 = d.add_edge(v04, v23, hc);
    int e20 = d.add_edge(v23, v42, hb), e21 = d.add_edge(v42, v41, ha);
    int e22 = d.add_edge(v40, v41, ga), e23 = d.add_edge(v10, v40, gb);
    int e24 = d.add_edge(vd2, vb3, gb), e25 = d.add_edge(vd1, vd2, gc);
    int e26 = d.add_edge(vd1, vd0, hc), e27 = d.add_edge(vd0, va0, hb);
    int e28 = d.add_edge(vb2, vc1, hb), e29 = d.add_edge(vb0, vc1, gb);
    d.bounded_faces = {
        // central 12-gon: the conjugation trick h_b^-1 g_b vs g_c^-1 h_a g_c h_a^-1
        {{e3, 1}, {e0, 1}, {e1, -1}, {e11, -1}, {e13, 1}, {e5, 1},
         {e4, -1}, {e7, -1}, {e6, 1}, {e12, -1}, {e10, 1}, {e2, -1}},
        {{e9, 1}, {e14, 1}, {e6, -1}, {e15, -1}},   // [g_c,h_c]
        {{e17, 1}, {e8, 1}, {e16, -1}, {e5, -1}},   // [g_a,h_a]
        {{e12, 1}, {e28, 1}, {e29, -1}, {e10, -1}}, // [g_b,h_b]
        {{e7, 1}, {e4, 1}, {e16, 1}, {e8, -1}, {e19, -1}, {e18, -1}, {e9, -1}, {e15, 1}}, // (c,a)
        {{e23, 1}, {e22, 1}, {e21, -1}, {e20, -1}, {e17, -1}, {e13, -1}, {e11, 1}, {e1, 1}}, // (b,a)
        {{e26, 1}, {e27, 1}, {e2, 1}, {e29, 1}, {e28, -1}, {e14, -1}, {e24, -1}, {e25, -1}}, // (c,b)
    };
    d.outer_face = {{e24, 1}, {e18, 1}, {e19, 1}, {e20, 1}, {e21, 1}, {e22, -1},
                    {e23, -1}, {e0, -1}, {e3, -1}, {e27, -1}, {e26, -1}, {e25, 1}};

    Figure fig;
    fig.diagram = std::move(d);
    auto one = [&](Gen x) { return word({pos(x)}); };
    auto two = [&](Gen x, Gen y) { return word({pos(x), pos(y)}); };
    GroupWord trick_k = word({neg(gc), pos(ha), pos(gc), neg(ha)});
    fig.relators = {
        comm_relator(one(ga), one(ha)),
        comm_relator(one(gb), one(hb)),
        comm_relator(one(gc), one(hc)),
        comm_relator(two(gb, ga), two(hb, ha)),
        comm_relator(two(gc, ga), two(hc, ha)),
        comm_relator(two(gc, gb), two(hc, hb)),
        comm_relator(word({neg(hb), pos(gb)}), trick_k),
    };
    fig.expected_outer = comm_relator(gens_product(GenKind::g, 3, 1), gens_product(GenKind::h, 3, 1));
    return fig;
}

Figure figure_2(int n) {
    if (n < 3) throw std::invalid_argument("figure_2 needs N >= 3");
    DehnDiagram d;
    d.name = "figure2(N=" + std::to_string(n) + ")";
    auto gi = [](int i) { return g(uint16_t(i)); };
    auto hi = [](int i) { return h(uint16_t(i)); };

    std::vector<int> B(static_cast<size_t>(2 * n + 1)), T(static_cast<size_t>(2 * n + 1));
    for (int i = 0; i <= 2 * n; ++i) B[size_t(i)] = d.add_vertex();
    T[0] = B[0];
    T[size_t(2 * n)] = B[size_t(2 * n)];
    for (int i = 1; i < 2 * n; ++i) T[size_t(i)] = d.add_vertex();
    std::vector<int> A(static_cast<size_t>(2 * n - 3)), C(static_cast<size_t>(2 * n - 3));
    A[0] = B[2];
    A[size_t(2 * n - 4)] = B[size_t(2 * n - 2)];
    C[0] = T[2];
    C[size_t(2 * n - 4)] = T[size_t(2 * n - 2)];
    for (int i = 1; i < 2 * n - 4; ++i) A[size_t(i)] = d.add_vertex();
    for (int i = 1; i < 2 * n - 4; ++i) C[size_t(i)] = d.add_vertex();
    std::vector<int> X(static_cast<size_t>(n - 2)), Y(static_cast<size_t>(n - 2));
    for (int s = 0; s <= n - 3; ++s) {
        X[size_t(s)] = d.add_vertex();
        Y[size_t(s)] = d.add_vertex();
    }

    std::vector<int> botH(static_cast<size_t>(n + 1)), botG(static_cast<size_t>(n + 1)), topG(static_cast<size_t>(n + 1)),
        topH(static_cast<size_t>(n + 1));
    for (int i = 1; i <= n; ++i) {
        botH[size_t(i)] = d.add_edge(B[size_t(i - 1)], B[size_t(i)], hi(n + 1 - i));
        botG[size_t(i)] = d.add_edge(B[size_t(n + i - 1)], B[size_t(n + i)], gi(n + 1 - i));
        topG[size_t(i)] = d.add_edge(T[size_t(i - 1)], T[size_t(i)], gi(n + 1 - i));
        topH[size_t(i)] = d.add_edge(T[size_t(n + i - 1)], T[size_t(n + i)], hi(n + 1 - i));
    }
    std::vector<int> aG(static_cast<size_t>(n - 2)), aH(static_cast<size_t>(n - 2)), cH(static_cast<size_t>(n - 2)), cG(static_cast<size_t>(n - 2));
    for (int t = 0; t <= n - 3; ++t) {
        aG[size_t(t)] = d.add_edge(A[size_t(2 * t)], A[size_t(2 * t + 1)], gi(n - t));
        aH[size_t(t)] = d.add_edge(A[size_t(2 * t + 1)], A[size_t(2 * t + 2)], hi(n - 2 - t));
        cH[size_t(t)] = d.add_edge(C[size_t(2 * t)], C[size_t(2 * t + 1)], hi(n - t));
        cG[size_t(t)] = d.add_edge(C[size_t(2 * t + 1)], C[size_t(2 * t + 2)], gi(n - 2 - t));
    }
    std::vector<int> E1(static_cast<size_t>(n - 2)), E2(static_cast<size_t>(n - 2)), E3(static_cast<size_t>(n - 2)), E4(static_cast<size_t>(n - 2));
    for (int s = 0; s <= n - 3; ++s) {
        int a = n - 1 - s;
        E1[size_t(s)] = d.add_edge(A[size_t(2 * s + 1)], X[size_t(s)], gi(a));
        E2[size_t(s)] = d.add_edge(Y[size_t(s)], A[size_t(2 * s + 1)], hi(a));
        E3[size_t(s)] = d.add_edge(Y[size_t(s)], C[size_t(2 * s + 1)], gi(a));
        E4[size_t(s)] = d.add_edge(C[size_t(2 * s + 1)], X[size_t(s)], hi(a));
    }

    // squares [g_a, h_a], 1 < a < N
    for (int s = 0; s <= n - 3; ++s)
        d.bounded_faces.push_back(
            {{E2[size_t(s)], -1}, {E3[size_t(s)], 1}, {E4[size_t(s)], 1}, {E1[size_t(s)], -1}});
    // left octagon (a = N-1)
    d.bounded_faces.push_back({{botH[1], 1}, {botH[2], 1}, {aG[0], 1}, {E1[0], 1},
                               {E4[0], -1}, {cH[0], -1}, {topG[2], -1}, {topG[1], -1}});
    // inner octagons
    for (int s = 1; s <= n - 3; ++s)
        d.bounded_faces.push_back({{aH[size_t(s - 1)], 1}, {aG[size_t(s)], 1}, {E1[size_t(s)], 1},
                                   {E4[size_t(s)], -1}, {cH[size_t(s)], -1}, {cG[size_t(s - 1)], -1},
                                   {E3[size_t(s - 1)], -1}, {E2[size_t(s - 1)], 1}});
    // right octagon (a = 1)
    d.bounded_faces.push_back({{aH[size_t(n - 3)], 1}, {botG[size_t(n - 1)], 1}, {botG[size_t(n)], 1},
                               {topH[size_t(n)], -1}, {topH[size_t(n - 1)], -1},
                               {cG[size_t(n - 3)], -1}, {E3[size_t(n - 3)], -1},
                               {E2[size_t(n - 3)], 1}});

    // bottom cap: sort h_{N-2}..h_1 g_N..g_3 into chain A's word
    {
        CapTiler tiler{d, {}, {}, {}, {}};
        tiler.verts.push_back(B[2]);
        for (int i = 3; i <= n; ++i) {
            tiler.edges.push_back(botH[size_t(i)]);
            tiler.labels.push_back(hi(n + 1 - i));
            tiler.verts.push_back(B[size_t(i)]);
        }
        for (int j = 1; j <= n - 2; ++j) {
            tiler.edges.push_back(botG[size_t(j)]);
            tiler.labels.push_back(gi(n + 1 - j));
            tiler.verts.push_back(B[size_t(n + j)]);
        }
        std::vector<Gen> target_labels;
        std::vector<int> target_edges, target_verts;
        for (int t = 0; t <= n - 3; ++t) {
            target_labels.push_back(gi(n - t));
            target_edges.push_back(aG[size_t(t)]);
            target_verts.push_back(A[size_t(2 * t + 1)]);
            target_labels.push_back(hi(n - 2 - t));
            target_edges.push_back(aH[size_t(t)]);
            if (t < n - 3) target_verts.push_back(A[size_t(2 * t + 2)]);
        }
        tiler.run(target_labels, target_edges, target_verts);
    }
    // top cap: sort chain C's word into g_{N-2}..g_1 h_N..h_3
    {
        CapTiler tiler{d, {}, {}, {}, {}};
        tiler.verts.push_back(C[0]);
        for (int t = 0; t <= n - 3; ++t) {
            tiler.edges.push_back(cH[size_t(t)]);
            tiler.labels.push_back(hi(n - t));
            tiler.verts.push_back(C[size_t(2 * t + 1)]);
            tiler.edges.push_back(cG[size_t(t)]);
            tiler.labels.push_back(gi(n - 2 - t));
            tiler.verts.push_back(C[size_t(2 * t + 2)]);
        }
        std::vector<Gen> target_labels;
        std::vector<int> target_edges, target_verts;
        for (int i = 3; i <= n; ++i) {
            target_labels.push_back(gi(n + 1 - i));
            target_edges.push_back(topG[size_t(i)]);
            target_verts.push_back(T[size_t(i)]);
        }
        for (int j = 1; j <= n - 2; ++j) {
            target_labels.push_back(hi(n + 1 - j));
            target_edges.push_back(topH[size_t(j)]);
            if (j < n - 2) target_verts.push_back(T[size_t(n + j)]);
        }
        tiler.run(target_labels, target_edges, target_verts);
    }

    d.outer_face.clear();
    for (int i = 1; i <= n; ++i) d.outer_face.push_back({topG[size_t(i)], 1});
    for (int j = 1; j <= n; ++j) d.outer_face.push_back({topH[size_t(j)], 1});
    for (int j = n; j >= 1; --j) d.outer_face.push_back({botG[size_t(j)], -1});
    for (int i = n; i >= 1; --i) d.outer_face.push_back({botH[size_t(i)], -1});

    compact(d);

    Figure fig;
    fig.diagram = std::move(d);
    for (int a = 1; a <= n; ++a)
        for (int c = 1; c <= n; ++c)
            if (std::abs(a - c) >= 2)
                fig.relators.push_back(
                    comm_relator(word({pos(gi(a))}), word({pos(hi(c))})));
    for (int a = 2; a < n; ++a)
        fig.relators.push_back(comm_relator(word({pos(gi(a))}), word({pos(hi(a))})));
    for (int a = 1; a < n; ++a)
        fig.relators.push_back(comm_relator(word({pos(gi(a + 1)), pos(gi(a))}),
                                            word({pos(hi(a + 1)), pos(hi(a))})));
    fig.expected_outer =
        comm_relator(gens_product(GenKind::g, n, 1), gens_product(GenKind::h, n, 1));
    return fig;
}

Figure figure_5(int n) {
    if (n < 4) throw std::invalid_argument("figure_5 needs N >= 4");
    DehnDiagram d;
    d.name = "figure5(N=" + std::to_string(n) + ")";
    auto gi = [](int i) { return g(uint16_t(i)); };
    auto hi = [](int i) { return h(uint16_t(i)); };
    const int rows = 2 * n - 3; // rows 0..2N-4 plus the top row

    std::vector<int> va(static_cast<size_t>(rows)), vb(static_cast<size_t>(rows)), v0(static_cast<size_t>(rows)), v1(static_cast<size_t>(rows)),
        v2(static_cast<size_t>(rows));
    for (int k = 0; k <= 2 * n - 4; ++k) {
        va[size_t(k)] = d.add_vertex();
        vb[size_t(k)] = d.add_vertex();
        v0[size_t(k)] = d.add_vertex();
        v1[size_t(k)] = d.add_vertex();
        v2[size_t(k)] = d.add_vertex();
    }
    int vaT = d.add_vertex(), vbT = d.add_vertex(), v1T = d.add_vertex(), v2T = d.add_vertex();
    int apexv = d.add_vertex();
    std::vector<int> vc(static_cast<size_t>(2 * n - 4)); // 1..2n-5 used
    for (int i = 1; i <= 2 * n - 5; ++i) vc[size_t(i)] = d.add_vertex();
    std::vector<int> wdu(static_cast<size_t>(n - 1)), wdb(static_cast<size_t>(n - 1)), wrb(static_cast<size_t>(n)), wru(static_cast<size_t>(n - 1));
    for (int i = 0; i <= n - 2; ++i) wdu[size_t(i)] = d.add_vertex();
    for (int i = 1; i <= n - 2; ++i) wdb[size_t(i)] = d.add_vertex();
    for (int i = 1; i <= n - 1; ++i) wrb[size_t(i)] = d.add_vertex();
    for (int i = 1; i <= n - 2; ++i) wru[size_t(i)] = d.add_vertex();

    std::vector<int> rA(static_cast<size_t>(rows)), rB(static_cast<size_t>(rows)), rC(static_cast<size_t>(rows)), rD(static_cast<size_t>(rows));
    for (int k = 0; k <= 2 * n - 4; ++k) {
        rA[size_t(k)] = d.add_edge(va[size_t(k)], vb[size_t(k)], gi(n));
        rB[size_t(k)] = d.add_edge(va[size_t(k)], v0[size_t(k)], hi(1));
        rC[size_t(k)] = d.add_edge(v0[size_t(k)], v1[size_t(k)], gi(n));
        rD[size_t(k)] = d.add_edge(v2[size_t(k)], v1[size_t(k)], hi(1));
    }
    int rAT = d.add_edge(vaT, vbT, gi(n));
    int rDT = d.add_edge(v2T, v1T, hi(1));
    auto vert_label = [&](int k) { return k <= n - 3 ? hi(k + 2) : gi(2 * n - 3 - k); };
    std::vector<int> lv(static_cast<size_t>(2 * n - 4)), rv(static_cast<size_t>(2 * n - 4));
    for (int k = 0; k <= 2 * n - 5; ++k) {
        if (k <= n - 3) {
            lv[size_t(k)] = d.add_edge(vb[size_t(k + 1)], vb[size_t(k)], vert_label(k));
            rv[size_t(k)] = d.add_edge(v2[size_t(k + 1)], v2[size_t(k)], vert_label(k));
        } else {
            lv[size_t(k)] = d.add_edge(vb[size_t(k)], vb[size_t(k + 1)], vert_label(k));
            rv[size_t(k)] = d.add_edge(v2[size_t(k)], v2[size_t(k + 1)], vert_label(k));
        }
    }
    int qL1 = d.add_edge(vaT, va[size_t(2 * n - 4)], hi(n));
    int qL3 = d.add_edge(vbT, vb[size_t(2 * n - 4)], hi(n));
    int qR1 = d.add_edge(v2[size_t(2 * n - 4)], v2T, gi(1));
    int qR3 = d.add_edge(v1[size_t(2 * n - 4)], v1T, gi(1));
    int apx1 = d.add_edge(vbT, apexv, gi(1));
    int apx2 = d.add_edge(apexv, v2T, hi(n));
    std::vector<int> bg(static_cast<size_t>(n - 1)), bh(static_cast<size_t>(n - 1));
    for (int t = 1; t <= n - 2; ++t) {
        int from = t == 1 ? vb[0] : vc[size_t(t - 1)];
        bg[size_t(t)] = d.add_edge(from, vc[size_t(t)], gi(n - t));
    }
    for (int t = 1; t <= n - 2; ++t) {
        int from = t == 1 ? vb[size_t(2 * n - 4)] : vc[size_t(n - 2 + t - 1)];
        int to = t == n - 2 ? vc[size_t(n - 2)] : vc[size_t(n - 2 + t)];
        bh[size_t(t)] = d.add_edge(from, to, hi(n - t));
    }
    std::vector<int> wu(static_cast<size_t>(n)), wb(static_cast<size_t>(n)), rb(static_cast<size_t>(n)), ru(static_cast<size_t>(n));
    for (int t = 1; t <= n - 1; ++t) {
        int from = t == 1 ? wdu[0] : wdu[size_t(t - 1)];
        int to = t == n - 1 ? vbT : wdu[size_t(t)];
        wu[size_t(t)] = d.add_edge(from, to, gi(n + 1 - t));
    }
    for (int t = 1; t <= n - 1; ++t) {
        int from = t == 1 ? wdu[0] : wdb[size_t(t - 1)];
        int to = t == n - 1 ? va[0] : wdb[size_t(t)];
        wb[size_t(t)] = d.add_edge(from, to, hi(n + 1 - t));
    }
    for (int t = 1; t <= n - 1; ++t) {
        int from = t == 1 ? v1[0] : wrb[size_t(t - 1)];
        rb[size_t(t)] = d.add_edge(from, wrb[size_t(t)], gi(n - t));
    }
    for (int t = 1; t <= n - 1; ++t) {
        int from = t == n - 1 ? v2T : wru[size_t(t)];
        int to = t == 1 ? wrb[size_t(n - 1)] : wru[size_t(t - 1)];
        ru[size_t(t)] = d.add_edge(from, to, hi(t));
    }

    // decagons: the conjugation rows
    for (int k = 0; k <= 2 * n - 5; ++k) {
        int rvs = k <= n - 3 ? -1 : 1;
        int lvs = k <= n - 3 ? 1 : -1;
        d.bounded_faces.push_back({{rB[size_t(k)], 1},
                                   {rC[size_t(k)], 1},
                                   {rD[size_t(k)], -1},
                                   {rv[size_t(k)], rvs},
                                   {rD[size_t(k + 1)], 1},
                                   {rC[size_t(k + 1)], -1},
                                   {rB[size_t(k + 1)], -1},
                                   {rA[size_t(k + 1)], 1},
                                   {lv[size_t(k)], lvs},
                                   {rA[size_t(k)], -1}});
    }
    // quads [g_N, h_N] and [g_1, h_1]
    d.bounded_faces.push_back({{qL1, -1}, {rAT, 1}, {qL3, 1}, {rA[size_t(2 * n - 4)], -1}});
    d.bounded_faces.push_back({{rD[size_t(2 * n - 4)], -1}, {qR1, 1}, {rDT, 1}, {qR3, -1}});
    // apex octagon: (g_N g_1, h_N h_1)
    d.bounded_faces.push_back({{rB[size_t(2 * n - 4)], 1}, {rC[size_t(2 * n - 4)], 1},
                               {qR3, 1}, {rDT, -1}, {apx2, -1}, {apx1, -1}, {rAT, -1}, {qL1, 1}});
    // left-column face: the (2..N-1) block relation
    {
        FaceWalk f;
        for (int t = 1; t <= n - 2; ++t) f.push_back({bh[size_t(t)], 1});
        for (int t = n - 2; t >= 1; --t) f.push_back({bg[size_t(t)], -1});
        for (int k = 0; k <= 2 * n - 5; ++k) f.push_back({lv[size_t(k)], k <= n - 3 ? -1 : 1});
        d.bounded_faces.push_back(std::move(f));
    }
    // left wing: the (2..N) block relation
    {
        FaceWalk f;
        for (int t = 1; t <= n - 1; ++t) f.push_back({wb[size_t(t)], 1});
        f.push_back({rA[0], 1});
        for (int t = 1; t <= n - 2; ++t) f.push_back({bg[size_t(t)], 1});
        for (int t = n - 2; t >= 1; --t) f.push_back({bh[size_t(t)], -1});
        f.push_back({qL3, -1});
        for (int t = n - 1; t >= 1; --t) f.push_back({wu[size_t(t)], -1});
        d.bounded_faces.push_back(std::move(f));
    }
    // right wing: the (1..N-1) block relation
    {
        FaceWalk f;
        for (int t = 1; t <= n - 1; ++t) f.push_back({rb[size_t(t)], 1});
        for (int t = 1; t <= n - 1; ++t) f.push_back({ru[size_t(t)], -1});
        f.push_back({qR1, -1});
        for (int k = 2 * n - 5; k >= 0; --k) f.push_back({rv[size_t(k)], k <= n - 3 ? 1 : -1});
        f.push_back({rD[0], 1});
        d.bounded_faces.push_back(std::move(f));
    }
    // outer
    {
        FaceWalk f;
        for (int t = 1; t <= n - 1; ++t) f.push_back({wu[size_t(t)], 1});
        f.push_back({apx1, 1});
        f.push_back({apx2, 1});
        for (int t = n - 1; t >= 1; --t) f.push_back({ru[size_t(t)], 1});
        for (int t = n - 1; t >= 1; --t) f.push_back({rb[size_t(t)], -1});
        f.push_back({rC[0], -1});
        f.push_back({rB[0], -1});
        for (int t = n - 1; t >= 1; --t) f.push_back({wb[size_t(t)], -1});
        d.outer_face = std::move(f);
    }

    Figure fig;
    fig.diagram = std::move(d);
    for (int a = 1; a <= n; ++a)
        fig.relators.push_back(comm_relator(word({pos(gi(a))}), word({pos(hi(a))})));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            fig.relators.push_back(comm_relator(word({pos(gi(b)), pos(gi(a))}),
                                                word({pos(hi(b)), pos(hi(a))})));
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                GroupWord k = word({neg(gi(c)), pos(hi(a)), pos(gi(c)), neg(hi(a))});
                fig.relators.push_back(comm_relator(word({pos(gi(b))}), k));
                fig.relators.push_back(comm_relator(word({neg(hi(b))}), k));
            }
    fig.relators.push_back(
        comm_relator(gens_product(GenKind::g, n - 1, 2), gens_product(GenKind::h, n - 1, 2)));
    fig.relators.push_back(
        comm_relator(gens_product(GenKind::g, n - 1, 1), gens_product(GenKind::h, n - 1, 1)));
    fig.relators.push_back(
        comm_relator(gens_product(GenKind::g, n, 2), gens_product(GenKind::h, n, 2)));
    fig.expected_outer =
        comm_relator(gens_product(GenKind::g, n, 1), gens_product(GenKind::h, n, 1));
    return fig;
}

Figure figure_by_id(const std::string& id) {
    auto parse_n = [&](size_t at, int dflt) {
        if (at >= id.size() || id[at] != ':') return dflt;
        return std::stoi(id.substr(at + 1));
    };
    if (id.rfind("1", 0) == 0 && id.size() == 1) return figure_1();
    if (id.rfind("2", 0) == 0) return figure_2(parse_n(1, 6));
    if (id == "3") return figure_3();
    if (id == "4") return figure_4();
    if (id.rfind("5", 0) == 0) return figure_5(parse_n(1, 4));
    throw std::invalid_argument("unknown figure id '" + id + "' (use 1, 2:<n>, 3, 4, 5:<n>)");
}

std::vector<std::string> default_figure_ids() {
    return {"1", "2:4", "2:5", "2:6", "3", "4", "5:4", "5:5"};
}

} // namespace rotlab
