#include "rotlab/dehn.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rotlab {

GroupWord GroupWord::parse(const std::string& text) {
    std::vector<GroupLetter> ls;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, '.')) {
        if (tok.empty()) continue;
        Gen x = Gen::parse(tok);
        // "^-1" parses as the inverse flag; reinterpret as exponent
        if (x.is_inverse())
            ls.push_back({x.base_symbol(), -1});
        else
            ls.push_back({x, 1});
    }
    return GroupWord(std::move(ls));
}

GroupWord GroupWord::inverse() const {
    std::vector<GroupLetter> out;
    out.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) out.push_back({it->gen, -it->exp});
    return GroupWord(std::move(out));
}

GroupWord GroupWord::concat(const GroupWord& o) const {
    std::vector<GroupLetter> out = ls_;
    out.insert(out.end(), o.ls_.begin(), o.ls_.end());
    return GroupWord(std::move(out));
}

GroupWord GroupWord::free_reduce() const {
    std::vector<GroupLetter> stack;
    for (GroupLetter l : ls_) {
        if (!stack.empty() && stack.back().gen == l.gen && stack.back().exp == -l.exp)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return GroupWord(std::move(stack));
}

GroupWord GroupWord::cyclic_reduce() const {
    GroupWord w = free_reduce();
    while (w.ls_.size() >= 2 && w.ls_.front().gen == w.ls_.back().gen &&
           w.ls_.front().exp == -w.ls_.back().exp) {
        w.ls_.erase(w.ls_.begin());
        w.ls_.pop_back();
        w = w.free_reduce();
    }
    return w;
}

GroupWord GroupWord::canonical_cyclic(bool up_to_inversion) const {
    GroupWord w = cyclic_reduce();
    if (w.ls_.empty()) return w;
    auto min_rotation = [](const GroupWord& v) {
        GroupWord best = v;
        GroupWord cur = v;
        for (size_t i = 1; i < v.ls_.size(); ++i) {
            std::rotate(cur.ls_.begin(), cur.ls_.begin() + 1, cur.ls_.end());
            if (cur < best) best = cur;
        }
        return best;
    };
    GroupWord best = min_rotation(w);
    if (up_to_inversion) {
        GroupWord alt = min_rotation(w.inverse());
        if (alt < best) best = alt;
    }
    return best;
}

bool GroupWord::cyclically_equal(const GroupWord& o, bool up_to_inversion) const {
    return canonical_cyclic(up_to_inversion) == o.canonical_cyclic(up_to_inversion);
}

std::string GroupWord::str(const std::map<uint32_t, std::string>* names) const {
    if (ls_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < ls_.size(); ++i) {
        if (i) s += ".";
        std::string nm = ls_[i].gen.name();
        if (names) {
            auto it = names->find(ls_[i].gen.code());
            if (it != names->end()) nm = it->second;
        }
        s += nm;
        if (ls_[i].exp < 0) s += "^-1";
    }
    return s;
}

int DehnDiagram::add_edge(int from, int to, Gen label) {
    edges.push_back({from, to, label});
    return int(edges.size()) - 1;
}

std::string DehnDiagram::label_of(Gen x) const {
    auto it = label_names.find(x.code());
    return it != label_names.end() ? it->second : x.name();
}

GroupWord face_word(const DehnDiagram& d, const FaceWalk& face) {
    std::vector<GroupLetter> ls;
    int at = -1;
    for (const FaceStep& st : face) {
        if (st.edge < 0 || st.edge >= int(d.edges.size()))
            throw std::out_of_range("face references edge " + std::to_string(st.edge));
        const DehnEdge& e = d.edges[size_t(st.edge)];
        int head = st.sign > 0 ? e.from : e.to;
        int tail = st.sign > 0 ? e.to : e.from;
        if (at >= 0 && head != at)
            throw std::invalid_argument("face walk is not a connected closed walk");
        at = tail;
        ls.push_back({e.label, st.sign > 0 ? 1 : -1});
    }
    if (!face.empty()) {
        const DehnEdge& e0 = d.edges[size_t(face.front().edge)];
        int start = face.front().sign > 0 ? e0.from : e0.to;
        if (at != start) throw std::invalid_argument("face walk does not close");
    }
    return GroupWord(std::move(ls));
}

ValidationReport validate(const DehnDiagram& d, const std::vector<GroupWord>& relators) {
    ValidationReport rep;
    rep.edge_count = d.edges.size();

    // vertex degrees
    std::vector<int> degree(size_t(d.vertex_count), 0);
    for (const DehnEdge& e : d.edges) {
        if (e.from < 0 || e.from >= d.vertex_count || e.to < 0 || e.to >= d.vertex_count) {
            rep.fail("edge endpoint out of range");
            return rep;
        }
        ++degree[size_t(e.from)];
        ++degree[size_t(e.to)];
    }
    for (int vtx = 0; vtx < d.vertex_count; ++vtx)
        if (degree[size_t(vtx)] < 2)
            rep.fail("vertex " + std::to_string(vtx) + " has fewer than 2 incident edges");

    // every edge exactly twice, once per direction, over bounded + outer
    std::vector<int> plus(d.edges.size(), 0), minus(d.edges.size(), 0);
    auto count_face = [&](const FaceWalk& f) {
        rep.total_boundary_length += f.size();
        for (const FaceStep& st : f) {
            if (st.edge < 0 || st.edge >= int(d.edges.size())) continue;
            (st.sign > 0 ? plus : minus)[size_t(st.edge)]++;
        }
    };
    for (const FaceWalk& f : d.bounded_faces) count_face(f);
    count_face(d.outer_face);
    for (size_t e = 0; e < d.edges.size(); ++e)
        if (plus[e] != 1 || minus[e] != 1)
            rep.fail("edge " + std::to_string(e) + " (" + d.label_of(d.edges[e].label) +
                     ") traversed " + std::to_string(plus[e]) + "+/" + std::to_string(minus[e]) +
                     "- times; expected once each way");
    if (rep.total_boundary_length != 2 * d.edges.size())
        rep.fail("boundary double-count mismatch");

    // each bounded face word must be a relator up to rotation/reduction/inversion
    std::vector<GroupWord> canon;
    canon.reserve(relators.size());
    for (const GroupWord& r : relators) canon.push_back(r.canonical_cyclic(true));
    for (size_t i = 0; i < d.bounded_faces.size(); ++i) {
        GroupWord w;
        try {
            w = face_word(d, d.bounded_faces[i]);
        } catch (const std::exception& ex) {
            rep.fail("face " + std::to_string(i) + ": " + ex.what());
            continue;
        }
        GroupWord c = w.canonical_cyclic(true);
        if (std::find(canon.begin(), canon.end(), c) == canon.end())
            rep.fail("face " + std::to_string(i) + " word " + w.str(&d.label_names) +
                     " is not a relator");
    }

    try {
        rep.outer_word = face_word(d, d.outer_face).canonical_cyclic(true);
    } catch (const std::exception& ex) {
        rep.fail(std::string("outer face: ") + ex.what());
    }
    return rep;
}

std::string to_dsl(const DehnDiagram& d) {
    std::ostringstream os;
    os << "diagram " << d.name << "\n";
    os << "vertices " << d.vertex_count << "\n";
    for (const DehnEdge& e : d.edges)
        os << "edge " << e.from << " " << e.to << " " << d.label_of(e.label) << "\n";
    auto steps = [&](const FaceWalk& f) {
        std::string s;
        for (const FaceStep& st : f) {
            s += " ";
            if (st.sign < 0) s += "-";
            s += std::to_string(st.edge);
        }
        return s;
    };
    for (const FaceWalk& f : d.bounded_faces) os << "face" << steps(f) << "\n";
    os << "outer" << steps(d.outer_face) << "\n";
    return os.str();
}

DehnDiagram from_dsl(const std::string& text) {
    DehnDiagram d;
    std::istringstream is(text);
    std::string line;
    std::map<std::string, Gen> by_label;
    uint16_t next_aux = 1;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw.empty() || kw[0] == '#') continue;
        if (kw == "diagram") {
            ls >> d.name;
        } else if (kw == "vertices") {
            ls >> d.vertex_count;
        } else if (kw == "edge") {
            int from, to;
            std::string label;
            if (!(ls >> from >> to >> label))
                throw std::invalid_argument("bad edge line: " + line);
            Gen x;
            auto it = by_label.find(label);
            if (it != by_label.end()) {
                x = it->second;
            } else {
                try {
                    x = Gen::parse(label);
                } catch (const std::exception&) {
                    x = z(next_aux++); // free-form label, assign an aux generator
                }
                by_label.emplace(label, x);
                d.label_names.emplace(x.code(), label);
            }
            d.edges.push_back({from, to, x});
        } else if (kw == "face" || kw == "outer") {
            FaceWalk f;
            std::string tok;
            while (ls >> tok) {
                FaceStep st;
                if (!tok.empty() && tok[0] == '-') {
                    st.sign = -1;
                    tok = tok.substr(1);
                }
                st.edge = std::stoi(tok);
                f.push_back(st);
            }
            if (kw == "face")
                d.bounded_faces.push_back(std::move(f));
            else
                d.outer_face = std::move(f);
        } else {
            throw std::invalid_argument("unknown DSL keyword: " + kw);
        }
    }
    return d;
}

DehnDiagram glue(const DehnDiagram& d1, const DehnDiagram& d2,
                 const std::map<int, int>& vertex_map, const std::map<int, int>& edge_map) {
    DehnDiagram out;
    out.name = d1.name + "+" + d2.name;
    out.vertex_count = d1.vertex_count;
    out.edges = d1.edges;
    out.bounded_faces = d1.bounded_faces;
    out.label_names = d1.label_names;
    for (const auto& [code, nm] : d2.label_names) out.label_names.emplace(code, nm);

    std::map<int, int> vmap; // d2 vertex -> out vertex
    for (int vtx = 0; vtx < d2.vertex_count; ++vtx) {
        auto it = vertex_map.find(vtx);
        vmap[vtx] = it != vertex_map.end() ? it->second : out.add_vertex();
    }
    std::map<int, int> emap; // d2 edge -> out edge
    for (int e = 0; e < int(d2.edges.size()); ++e) {
        auto it = edge_map.find(e);
        if (it != edge_map.end()) {
            const DehnEdge& a = out.edges[size_t(it->second)];
            const DehnEdge& b = d2.edges[size_t(e)];
            if (a.from != vmap[b.from] || a.to != vmap[b.to] || a.label != b.label)
                throw std::invalid_argument("glue: identified edges disagree");
            emap[e] = it->second;
        } else {
            const DehnEdge& b = d2.edges[size_t(e)];
            emap[e] = out.add_edge(vmap[b.from], vmap[b.to], b.label);
        }
    }
    for (const FaceWalk& f : d2.bounded_faces) {
        FaceWalk g;
        for (const FaceStep& st : f) g.push_back({emap[st.edge], st.sign});
        out.bounded_faces.push_back(std::move(g));
    }

    // stitch the outer walk from the slots bounded faces leave unused
    std::vector<int> plus(out.edges.size(), 0), minus(out.edges.size(), 0);
    for (const FaceWalk& f : out.bounded_faces)
        for (const FaceStep& st : f) (st.sign > 0 ? plus : minus)[size_t(st.edge)]++;
    struct Slot {
        int edge;
        int sign;
        int head, tail;
        bool used = false;
    };
    std::vector<Slot> slots;
    for (int e = 0; e < int(out.edges.size()); ++e) {
        const DehnEdge& ed = out.edges[size_t(e)];
        if (plus[size_t(e)] == 0) slots.push_back({e, 1, ed.from, ed.to, false});
        if (minus[size_t(e)] == 0) slots.push_back({e, -1, ed.to, ed.from, false});
    }
    if (slots.empty()) throw std::invalid_argument("glue: no boundary left for an outer face");
    FaceWalk outer;
    Slot* cur = &slots.front();
    cur->used = true;
    outer.push_back({cur->edge, cur->sign});
    int at = cur->tail, start = cur->head;
    while (at != start) {
        Slot* next = nullptr;
        for (Slot& s : slots) {
            if (s.used || s.head != at) continue;
            if (next) throw std::invalid_argument("glue: ambiguous outer boundary");
            next = &s;
        }
        if (!next) throw std::invalid_argument("glue: outer boundary does not close");
        next->used = true;
        outer.push_back({next->edge, next->sign});
        at = next->tail;
    }
    for (const Slot& s : slots)
        if (!s.used) throw std::invalid_argument("glue: outer boundary is disconnected");
    out.outer_face = std::move(outer);
    return out;
}

} // namespace rotlab
