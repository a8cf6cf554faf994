#include "rotlab/ncgb.hpp"
#include "rotlab/text_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace rotlab {

MonomialOrder MonomialOrder::deglex_default(const Alphabet& alphabet) {
    return deglex(alphabet.generators());
}

MonomialOrder MonomialOrder::deglex(const std::vector<Gen>& precedence) {
    MonomialOrder o;
    o.precedence_ = precedence;
    for (size_t i = 0; i < precedence.size(); ++i) o.rank_.emplace(precedence[i].code(), int(i));
    return o;
}

int MonomialOrder::rank(Gen x) const {
    auto it = rank_.find(x.code());
    if (it == rank_.end())
        throw std::invalid_argument("generator " + x.name() + " has no rank in this order");
    return it->second;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i < a.degree(); ++i) {
        Gen x = a.at(i), y = b.at(i);
        if (x != y) return rank(x) < rank(y);
    }
    return false;
}

FreePoly expand_certificate(const Certificate& cert, const std::vector<FreePoly>& generators,
                            const AlphabetPtr& alphabet) {
    FreePoly out = FreePoly::zero(alphabet);
    for (const CertTerm& t : cert) {
        if (t.gen >= generators.size())
            throw std::out_of_range("certificate references generator " + std::to_string(t.gen));
        FreePoly l = FreePoly::term(alphabet, t.coeff, t.left);
        FreePoly r = FreePoly::word(alphabet, t.right);
        out += l * generators[t.gen] * r;
    }
    return out;
}

std::string Verdict::str() const {
    if (is_member()) return "member";
    if (is_not_member())
        return "not_member_up_to_bound(" + std::to_string(std::get<NotMemberUpToBound>(v).bound) + ")";
    return "inconclusive(" + std::to_string(std::get<Inconclusive>(v).bound) + ")";
}

// ---------------------------------------------------------------------------
// engine internals: words are inline byte strings over precedence slots,
// so lexicographic-by-slot equals the monomial order's letter precedence

namespace detail {

constexpr int kMaxWordLen = 47;

struct PWord {
    uint8_t len = 0;
    uint8_t a[kMaxWordLen] = {};

    bool empty() const { return len == 0; }

    static PWord concat3(const PWord& l, const PWord& m, const PWord& r) {
        if (int(l.len) + int(m.len) + int(r.len) > kMaxWordLen)
            throw std::length_error("engine word length limit exceeded");
        PWord w;
        w.len = uint8_t(l.len + m.len + r.len);
        std::memcpy(w.a, l.a, l.len);
        std::memcpy(w.a + l.len, m.a, m.len);
        std::memcpy(w.a + l.len + m.len, r.a, r.len);
        return w;
    }

    PWord prefix(uint8_t n) const {
        PWord w;
        w.len = n;
        std::memcpy(w.a, a, n);
        return w;
    }
    PWord suffix_from(uint8_t i) const {
        PWord w;
        w.len = uint8_t(len - i);
        std::memcpy(w.a, a + i, w.len);
        return w;
    }

    friend bool operator==(const PWord& x, const PWord& y) {
        return x.len == y.len && std::memcmp(x.a, y.a, x.len) == 0;
    }
};

// deglex: degree first, then lexicographic by slot
inline int cmp(const PWord& x, const PWord& y) {
    if (x.len != y.len) return x.len < y.len ? -1 : 1;
    return std::memcmp(x.a, y.a, x.len);
}
inline bool pless(const PWord& x, const PWord& y) { return cmp(x, y) < 0; }

// translation between API words and slot words
struct Ctx {
    std::vector<Gen> by_slot;
    std::map<uint32_t, uint8_t> slot_of;

    explicit Ctx(const MonomialOrder& order) : by_slot(order.precedence()) {
        if (by_slot.size() > 255) throw std::invalid_argument("alphabet too large for the engine");
        for (size_t i = 0; i < by_slot.size(); ++i)
            slot_of.emplace(by_slot[i].code(), uint8_t(i));
    }

    PWord to_pword(const Word& w) const {
        if (w.degree() > size_t(kMaxWordLen)) throw std::length_error("word too long for the engine");
        PWord p;
        p.len = uint8_t(w.degree());
        for (size_t i = 0; i < w.degree(); ++i) {
            auto it = slot_of.find(w.at(i).code());
            if (it == slot_of.end())
                throw std::invalid_argument("generator " + w.at(i).name() + " not in the order");
            p.a[i] = it->second;
        }
        return p;
    }

    Word to_word(const PWord& p) const {
        std::vector<Gen> ls(p.len);
        for (uint8_t i = 0; i < p.len; ++i) ls[i] = by_slot[p.a[i]];
        return Word(std::move(ls));
    }
};

struct PTerm {
    PWord w;
    Rational c;
};

// terms strictly descending in deglex-by-slot
struct IPoly {
    std::vector<PTerm> t;

    bool zero() const { return t.empty(); }
    const PWord& lead() const { return t.front().w; }
    const Rational& lc() const { return t.front().c; }
    int degree() const { return t.empty() ? -1 : int(t.front().w.len); }
};

IPoly ipoly_from(const FreePoly& p, const Ctx& ctx) {
    IPoly q;
    q.t.reserve(p.terms().size());
    for (const auto& [w, c] : p.terms()) q.t.push_back({ctx.to_pword(w), c});
    std::sort(q.t.begin(), q.t.end(), [](const PTerm& a, const PTerm& b) { return pless(b.w, a.w); });
    return q;
}

FreePoly to_free(const IPoly& p, const Ctx& ctx, const AlphabetPtr& alph) {
    std::vector<FreePoly::Term> ts;
    ts.reserve(p.t.size());
    for (const PTerm& t : p.t) ts.emplace_back(ctx.to_word(t.w), t.c);
    return FreePoly::from_terms(alph, std::move(ts));
}

// one summand c * (l . src . r) of a lazily merged polynomial
struct RedStream {
    const IPoly* src;
    uint32_t idx;
    Rational c;
    PWord l, r;
};

struct HeapEntry {
    PWord w;
    uint32_t sid;
};
struct HeapCmp { // max-heap on words
    bool operator()(const HeapEntry& a, const HeapEntry& b) const { return pless(a.w, b.w); }
};

// Heap-merged division: reduce the formal sum of the streams, spawning one
// new stream per reduction step instead of re-merging tails.
//   FindDiv:  (word, pos, elt, len, reducer poly) -> bool
//   OnReduce: (elt, coeff, left, right) for certificate bookkeeping
template <class FindDiv, class OnReduce>
IPoly heap_reduce(std::vector<RedStream> streams, FindDiv find, OnReduce on_reduce) {
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapCmp> heap;
    auto push_stream = [&](uint32_t sid) {
        RedStream& s = streams[sid];
        if (s.idx < s.src->t.size())
            heap.push({PWord::concat3(s.l, s.src->t[s.idx].w, s.r), sid});
    };
    for (uint32_t i = 0; i < streams.size(); ++i) push_stream(i);
    IPoly nf;
    while (!heap.empty()) {
        PWord w = heap.top().w;
        Rational acc(0);
        while (!heap.empty() && heap.top().w == w) {
            uint32_t sid = heap.top().sid;
            heap.pop();
            RedStream& s = streams[sid];
            acc += s.c * s.src->t[s.idx].c;
            ++s.idx;
            push_stream(sid);
        }
        if (acc.is_zero()) continue;
        int pos, e, len;
        const IPoly* reducer = nullptr;
        if (!find(w, pos, e, len, reducer)) {
            nf.t.push_back({w, std::move(acc)});
            continue;
        }
        PWord l = w.prefix(uint8_t(pos));
        PWord r = w.suffix_from(uint8_t(pos + len));
        on_reduce(e, acc, l, r);
        if (reducer->t.size() > 1) {
            streams.push_back({reducer, 1, -acc, l, r});
            push_stream(uint32_t(streams.size() - 1));
        }
    }
    return nf;
}

struct PCertTerm {
    Rational c;
    PWord l;
    uint32_t gen = 0;
    PWord r;
};
using PCert = std::vector<PCertTerm>;

void normalize_cert(PCert& cert) {
    if (cert.empty()) return;
    std::sort(cert.begin(), cert.end(), [](const PCertTerm& a, const PCertTerm& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        int k = cmp(a.l, b.l);
        if (k != 0) return k < 0;
        return cmp(a.r, b.r) < 0;
    });
    PCert out;
    out.reserve(cert.size());
    for (PCertTerm& t : cert) {
        if (!out.empty() && out.back().gen == t.gen && out.back().l == t.l && out.back().r == t.r) {
            out.back().c += t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    cert = std::move(out);
}

// append c * (l . cert . r)
void compose_cert(PCert& into, const PCert& cert, const Rational& c, const PWord& l,
                  const PWord& r) {
    for (const PCertTerm& t : cert)
        into.push_back({c * t.c, PWord::concat3(l, t.l, PWord()), t.gen,
                        PWord::concat3(t.r, r, PWord())});
}

// trie over slot words; children in a flat array, stride = alphabet size
struct Trie {
    int stride;
    std::vector<int32_t> child; // node*stride + slot -> node or -1
    std::vector<int32_t> elt;   // node -> element id or -1

    explicit Trie(int k) : stride(k) { add_node(); }

    int add_node() {
        child.insert(child.end(), size_t(stride), -1);
        elt.push_back(-1);
        return int(elt.size()) - 1;
    }

    void insert(const PWord& w, int id) {
        int cur = 0;
        for (uint8_t i = 0; i < w.len; ++i) {
            size_t slot = size_t(cur) * size_t(stride) + w.a[i];
            if (child[slot] < 0) {
                int fresh = add_node(); // may reallocate `child`
                child[slot] = fresh;
            }
            cur = child[slot];
        }
        elt[size_t(cur)] = id;
    }

    // leftmost position, then shortest match; alive() filters retired elements
    template <class Alive>
    bool find(const PWord& w, Alive alive, int& pos, int& id, int& len) const {
        if (elt[0] >= 0 && alive(elt[0])) {
            pos = 0;
            id = elt[0];
            len = 0;
            return true;
        }
        for (int p = 0; p < int(w.len); ++p) {
            int cur = 0;
            for (int k = 0; p + k < int(w.len); ++k) {
                cur = child[size_t(cur) * size_t(stride) + w.a[p + k]];
                if (cur < 0) break;
                int e = elt[size_t(cur)];
                if (e >= 0 && alive(e)) {
                    pos = p;
                    id = e;
                    len = k + 1;
                    return true;
                }
            }
        }
        return false;
    }
};

struct Elt {
    IPoly poly;
    PCert cert;
    bool alive = true;
};

struct Engine {
    Ctx ctx;
    int bound;
    CompletionOptions opts;
    bool track;

    std::vector<Elt> elts;
    Trie trie;
    size_t alive_n = 0;
    CompletionStats stats;
    int complete_below = 0;

    // obstructions are compact (i, j, s) records; pending inserts (initial
    // generators and retired elements) carry their polynomials separately
    struct Obstruction {
        int32_t deg;
        uint64_t seq;
        int32_t i, j, s;
    };
    struct ObsCmp {
        bool operator()(const Obstruction& a, const Obstruction& b) const {
            if (a.deg != b.deg) return a.deg > b.deg;
            return a.seq > b.seq;
        }
    };
    struct PendingInsert {
        int32_t deg;
        uint64_t seq;
        IPoly poly;
        PCert cert;
    };
    struct InsCmp {
        bool operator()(const PendingInsert& a, const PendingInsert& b) const {
            if (a.deg != b.deg) return a.deg > b.deg;
            return a.seq > b.seq;
        }
    };
    std::priority_queue<Obstruction, std::vector<Obstruction>, ObsCmp> obs_queue;
    std::priority_queue<PendingInsert, std::vector<PendingInsert>, InsCmp> ins_queue;
    uint64_t seq = 0;

    static bool InsOverObs(const PendingInsert& a, const Obstruction& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.seq < b.seq;
    }

    Engine(const MonomialOrder& order, int b, const CompletionOptions& op)
        : ctx(order), bound(b), opts(op), track(op.track_certificates),
          trie(int(order.precedence().size())) {}

    bool elt_alive(int e) const { return elts[size_t(e)].alive; }

    // streams = nf + expand(delta)
    IPoly reduce_streams(std::vector<RedStream> streams, PCert* delta) {
        auto find = [this](const PWord& w, int& pos, int& e, int& len, const IPoly*& poly) {
            auto alive = [this](int x) { return elt_alive(x); };
            if (!trie.find(w, alive, pos, e, len)) return false;
            poly = &elts[size_t(e)].poly;
            return true;
        };
        auto on_reduce = [this, delta](int e, const Rational& c, const PWord& l, const PWord& r) {
            if (delta && track) compose_cert(*delta, elts[size_t(e)].cert, c, l, r);
        };
        return heap_reduce(std::move(streams), find, on_reduce);
    }

    void enqueue_insert(IPoly p, PCert cert) {
        if (p.zero()) return;
        PendingInsert e{int32_t(p.degree()), seq++, std::move(p), std::move(cert)};
        ins_queue.push(std::move(e));
    }

    void enqueue_pair(int x, int y) {
        const PWord& lx = elts[size_t(x)].poly.lead();
        const PWord& ly = elts[size_t(y)].poly.lead();
        int nx = lx.len, ny = ly.len;
        if (nx == 0 || ny == 0) return;
        for (int s = 1; s < std::min(nx, ny); ++s) {
            if (nx + ny - s > bound) continue;
            if (std::memcmp(lx.a + (nx - s), ly.a, size_t(s)) != 0) continue;
            obs_queue.push({int32_t(nx + ny - s), seq++, x, y, s});
        }
    }

    // drop obstructions whose elements have since been retired
    void compact_obstructions() {
        std::vector<Obstruction> live;
        live.reserve(obs_queue.size() / 2);
        while (!obs_queue.empty()) {
            const Obstruction& o = obs_queue.top();
            if (elts[size_t(o.i)].alive && elts[size_t(o.j)].alive) live.push_back(o);
            obs_queue.pop();
        }
        obs_queue = decltype(obs_queue)(ObsCmp{}, std::move(live));
    }

    void add_element(IPoly nf, PCert cert) {
        Rational lc = nf.lc();
        if (!lc.is_one()) {
            Rational inv = lc.inverse();
            for (PTerm& t : nf.t) t.c *= inv;
            for (PCertTerm& t : cert) t.c *= inv;
        }
        if (track) normalize_cert(cert);
        // retire elements whose lead the new lead divides
        const PWord& nl = nf.lead();
        for (int j = 0; j < int(elts.size()); ++j) {
            Elt& e = elts[size_t(j)];
            if (!e.alive) continue;
            const PWord& le = e.poly.lead();
            if (le.len < nl.len) continue;
            bool divides = false;
            for (int p = 0; p + nl.len <= le.len && !divides; ++p)
                divides = std::memcmp(le.a + p, nl.a, nl.len) == 0;
            if (!divides) continue;
            e.alive = false;
            --alive_n;
            enqueue_insert(std::move(e.poly), std::move(e.cert));
            e.poly = IPoly{};
            e.cert.clear();
        }
        int id = int(elts.size());
        elts.push_back({std::move(nf), std::move(cert), true});
        ++alive_n;
        trie.insert(elts.back().poly.lead(), id);
        for (int j = 0; j <= id; ++j) {
            if (!elts[size_t(j)].alive) continue;
            enqueue_pair(id, j);
            if (j != id) enqueue_pair(j, id);
        }
    }

    void run(const std::vector<FreePoly>& gens) {
        auto t0 = std::chrono::steady_clock::now();
        for (size_t k = 0; k < gens.size(); ++k) {
            if (gens[k].is_zero())
                throw std::invalid_argument("zero generator at position " + std::to_string(k));
            if (gens[k].degree() > bound)
                throw std::invalid_argument("generator degree " + std::to_string(gens[k].degree()) +
                                            " above bound " + std::to_string(bound));
            PCert c;
            if (track) c.push_back({Rational(1), PWord(), uint32_t(k), PWord()});
            enqueue_insert(ipoly_from(gens[k], ctx), std::move(c));
        }
        int min_unresolved = bound + 1;
        size_t tick = 0;
        const bool verbose = std::getenv("ROTLAB_VERBOSE") != nullptr;
        while (!obs_queue.empty() || !ins_queue.empty()) {
            int pending_deg = std::min(obs_queue.empty() ? bound + 1 : obs_queue.top().deg,
                                       ins_queue.empty() ? bound + 1 : ins_queue.top().deg);
            if (++tick % 64 == 0 || alive_n > opts.max_basis) {
                double elapsed =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                if (alive_n > opts.max_basis || elapsed > opts.max_seconds) {
                    stats.truncated = true;
                    min_unresolved = pending_deg;
                    break;
                }
                if (verbose && tick % 16384 == 0)
                    std::fprintf(stderr, "[gb] deg=%d basis=%zu obs=%zu spolys=%zu\n", pending_deg,
                                 alive_n, obs_queue.size(), stats.spolys_reduced);
                if (obs_queue.size() > 4000000) compact_obstructions();
            }

            bool take_insert =
                !ins_queue.empty() &&
                (obs_queue.empty() || InsOverObs(ins_queue.top(), obs_queue.top()));
            std::vector<RedStream> streams;
            IPoly input;
            PCert cert;
            if (take_insert) {
                PendingInsert e = std::move(const_cast<PendingInsert&>(ins_queue.top()));
                ins_queue.pop();
                input = std::move(e.poly);
                cert = std::move(e.cert);
                streams.push_back({&input, 0, Rational(1), PWord(), PWord()});
            } else {
                Obstruction o = obs_queue.top();
                obs_queue.pop();
                if (!elts[size_t(o.i)].alive || !elts[size_t(o.j)].alive) continue;
                const IPoly& fi = elts[size_t(o.i)].poly;
                const IPoly& fj = elts[size_t(o.j)].poly;
                PWord a = fi.lead().prefix(uint8_t(fi.lead().len - o.s));
                PWord b = fj.lead().suffix_from(uint8_t(o.s));
                PWord none;
                // s-polynomial fi.b - a.fj (leads cancel in the merge)
                streams.push_back({&fi, 0, Rational(1), none, b});
                streams.push_back({&fj, 0, Rational(-1), a, none});
                if (track) {
                    compose_cert(cert, elts[size_t(o.i)].cert, Rational(1), none, b);
                    compose_cert(cert, elts[size_t(o.j)].cert, Rational(-1), a, none);
                }
            }
            ++stats.spolys_reduced;
            PCert delta;
            IPoly nf = reduce_streams(std::move(streams), track ? &delta : nullptr);
            if (nf.zero()) {
                ++stats.reductions_to_zero;
                continue;
            }
            if (track) {
                for (PCertTerm& t : delta) t.c = -t.c;
                cert.insert(cert.end(), delta.begin(), delta.end());
                normalize_cert(cert);
            }
            add_element(std::move(nf), std::move(cert));
        }
        if (obs_queue.empty() && ins_queue.empty()) min_unresolved = bound + 1;
        // one tail-interreduction pass: leads are pairwise irreducible and
        // never change, so a single pass already yields the reduced basis
        for (int i = 0; i < int(elts.size()); ++i) {
            if (!elts[size_t(i)].alive) continue;
            elts[size_t(i)].alive = false;
            PCert delta;
            IPoly nf = reduce_streams({{&elts[size_t(i)].poly, 0, Rational(1), PWord(), PWord()}},
                                      track ? &delta : nullptr);
            elts[size_t(i)].alive = true;
            bool same = nf.t.size() == elts[size_t(i)].poly.t.size();
            if (same)
                for (size_t k = 0; k < nf.t.size(); ++k)
                    if (!(nf.t[k].w == elts[size_t(i)].poly.t[k].w) ||
                        nf.t[k].c != elts[size_t(i)].poly.t[k].c) {
                        same = false;
                        break;
                    }
            if (!same) {
                if (track) {
                    for (PCertTerm& t : delta) t.c = -t.c;
                    PCert& c = elts[size_t(i)].cert;
                    c.insert(c.end(), delta.begin(), delta.end());
                    normalize_cert(c);
                }
                elts[size_t(i)].poly = std::move(nf);
            }
        }
        stats.basis_size = alive_n;
        complete_below = std::min(bound, min_unresolved - 1);
    }
};

} // namespace detail

// ---------------------------------------------------------------------------

struct GbRuntime {
    detail::Ctx ctx;
    std::vector<detail::IPoly> polys;
    std::vector<detail::PCert> certs; // may be empty
    detail::Trie trie;

    GbRuntime(const MonomialOrder& order, const std::vector<FreePoly>& elements,
              const std::vector<Certificate>& certificates)
        : ctx(order), trie(int(order.precedence().size())) {
        for (size_t i = 0; i < elements.size(); ++i) {
            polys.push_back(detail::ipoly_from(elements[i], ctx));
            trie.insert(polys.back().lead(), int(i));
        }
        for (const Certificate& c : certificates) {
            detail::PCert pc;
            pc.reserve(c.size());
            for (const CertTerm& t : c)
                pc.push_back({t.coeff, ctx.to_pword(t.left), uint32_t(t.gen), ctx.to_pword(t.right)});
            certs.push_back(std::move(pc));
        }
    }
};

GroebnerBasis::GroebnerBasis(AlphabetPtr alphabet, MonomialOrder order, int bound)
    : alphabet_(std::move(alphabet)), order_(std::move(order)), bound_(bound) {}

GroebnerBasis complete(const std::vector<FreePoly>& generators, const MonomialOrder& order,
                       int bound, const CompletionOptions& opts, std::string source) {
    if (bound > detail::kMaxWordLen)
        throw std::invalid_argument("bound above the engine word-length limit");
    if (generators.empty()) {
        GroebnerBasis gb(nullptr, order, bound);
        gb.homogeneous_source_ = true;
        gb.complete_below_ = bound;
        gb.source_ = std::move(source);
        return gb;
    }
    AlphabetPtr alph = generators.front().alphabet();
    for (const FreePoly& p : generators) require_same_alphabet(alph, p.alphabet(), "complete");

    // proportional duplicates add nothing to the ideal; keep the first of
    // each class and remap certificate indices back afterwards
    std::vector<FreePoly> unique;
    std::vector<size_t> orig_index;
    {
        std::map<std::string, size_t> seen;
        for (size_t k = 0; k < generators.size(); ++k) {
            FreePoly monic = generators[k].scaled(generators[k].leading_coeff().inverse());
            auto [it, fresh] = seen.emplace(monic.str(), k);
            if (fresh) {
                unique.push_back(generators[k]);
                orig_index.push_back(k);
            }
        }
    }

    detail::Engine eng(order, bound, opts);
    eng.run(unique);

    GroebnerBasis gb(alph, order, bound);
    gb.inputs_ = generators;
    gb.source_ = std::move(source);
    gb.stats_ = eng.stats;
    gb.complete_below_ = eng.complete_below;
    gb.homogeneous_source_ = std::all_of(generators.begin(), generators.end(),
                                         [](const FreePoly& p) { return p.is_homogeneous(); });

    std::vector<int> ids;
    for (int i = 0; i < int(eng.elts.size()); ++i)
        if (eng.elts[size_t(i)].alive) ids.push_back(i);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return detail::pless(eng.elts[size_t(a)].poly.lead(), eng.elts[size_t(b)].poly.lead());
    });
    for (int i : ids) {
        gb.elements_.push_back(detail::to_free(eng.elts[size_t(i)].poly, eng.ctx, alph));
        if (opts.track_certificates) {
            Certificate cert;
            cert.reserve(eng.elts[size_t(i)].cert.size());
            for (const detail::PCertTerm& t : eng.elts[size_t(i)].cert)
                cert.push_back(
                    {t.c, eng.ctx.to_word(t.l), orig_index[t.gen], eng.ctx.to_word(t.r)});
            gb.certs_.push_back(std::move(cert));
        }
    }
    return gb;
}

FreePoly GroebnerBasis::normal_form(const FreePoly& p, Certificate* cert) const {
    if (alphabet_) require_same_alphabet(alphabet_, p.alphabet(), "normal_form");
    if (p.degree() > bound_)
        throw std::invalid_argument("normal_form: query degree " + std::to_string(p.degree()) +
                                    " above bound " + std::to_string(bound_));
    if (elements_.empty()) return p;

    if (!runtime_) runtime_ = std::make_shared<const GbRuntime>(order_, elements_, certs_);
    const GbRuntime& rt = *runtime_;
    detail::IPoly q = detail::ipoly_from(p, rt.ctx);
    detail::PCert delta;
    auto find = [&rt](const detail::PWord& w, int& pos, int& e, int& len,
                      const detail::IPoly*& poly) {
        if (!rt.trie.find(w, [](int) { return true; }, pos, e, len)) return false;
        poly = &rt.polys[size_t(e)];
        return true;
    };
    auto on_reduce = [&](int e, const Rational& c, const detail::PWord& l,
                         const detail::PWord& r) {
        if (cert && !rt.certs.empty()) detail::compose_cert(delta, rt.certs[size_t(e)], c, l, r);
    };
    detail::IPoly nf = detail::heap_reduce(
        {{&q, 0, Rational(1), detail::PWord(), detail::PWord()}}, find, on_reduce);
    if (cert) {
        detail::normalize_cert(delta);
        for (const detail::PCertTerm& t : delta)
            cert->push_back({t.c, rt.ctx.to_word(t.l), t.gen, rt.ctx.to_word(t.r)});
    }
    return detail::to_free(nf, rt.ctx, p.alphabet());
}

Verdict GroebnerBasis::membership(const FreePoly& q) const {
    Certificate cert;
    FreePoly nf = normal_form(q, &cert);
    if (nf.is_zero()) {
        Member m;
        if (!certs_.empty() || elements_.empty()) {
            FreePoly expanded = expand_certificate(cert, inputs_, q.alphabet());
            if (expanded != q)
                throw std::logic_error("certificate does not re-multiply to the query");
            m.certificate = std::move(cert);
            m.certificate_checked = true;
        }
        return {m};
    }
    if (homogeneous_source_ && q.degree() <= complete_below_)
        return {NotMemberUpToBound{complete_below_}};
    return {Inconclusive{complete_below_}};
}

std::string GroebnerBasis::to_json() const {
    nlohmann::json j;
    j["bound"] = bound_;
    j["complete_below"] = complete_below_;
    j["homogeneous"] = homogeneous_source_;
    j["source"] = source_;
    std::vector<std::string> prec;
    for (Gen x : order_.precedence()) prec.push_back(x.name());
    j["order"] = {{"kind", "deglex"}, {"precedence", prec}};
    std::vector<std::string> alph;
    if (alphabet_)
        for (Gen x : alphabet_->generators()) alph.push_back(x.name());
    j["alphabet"] = alph;
    std::vector<std::string> els;
    for (const FreePoly& e : elements_) els.push_back(e.str());
    j["elements"] = els;
    std::vector<std::string> ins;
    for (const FreePoly& p : inputs_) ins.push_back(p.str());
    j["generators"] = ins;
    return j.dump(2);
}

GroebnerBasis GroebnerBasis::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<Gen> gens;
    for (const auto& s : j.at("alphabet")) gens.push_back(Gen::parse(s.get<std::string>()));
    AlphabetPtr alph = share(Alphabet(gens));
    std::vector<Gen> prec;
    for (const auto& s : j.at("order").at("precedence"))
        prec.push_back(Gen::parse(s.get<std::string>()));
    GroebnerBasis gb(alph, MonomialOrder::deglex(prec), j.at("bound").get<int>());
    gb.complete_below_ = j.at("complete_below").get<int>();
    gb.homogeneous_source_ = j.at("homogeneous").get<bool>();
    gb.source_ = j.value("source", "");
    for (const auto& s : j.at("elements"))
        gb.elements_.push_back(parse_free_poly(s.get<std::string>(), alph));
    for (const auto& s : j.at("generators"))
        gb.inputs_.push_back(parse_free_poly(s.get<std::string>(), alph));
    return gb;
}

} // namespace rotlab
