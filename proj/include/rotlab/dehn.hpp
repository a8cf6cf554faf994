#pragma once

#include "rotlab/alphabet.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace rotlab {

struct GroupLetter {
    Gen gen;
    int exp = 1; // +1 or -1

    friend bool operator==(GroupLetter a, GroupLetter b) { return a.gen == b.gen && a.exp == b.exp; }
    friend bool operator<(GroupLetter a, GroupLetter b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.exp < b.exp;
    }
};

/// Word in a free group with inverses; free and cyclic reduction give
/// canonical forms.
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<GroupLetter> ls) : ls_(std::move(ls)) {}

    /// Parse e.g. "g1.h1.g1^-1.h1^-1".
    static GroupWord parse(const std::string& text);

    const std::vector<GroupLetter>& letters() const { return ls_; }
    size_t size() const { return ls_.size(); }
    bool empty() const { return ls_.empty(); }

    GroupWord inverse() const;
    GroupWord concat(const GroupWord& o) const;
    GroupWord free_reduce() const;
    GroupWord cyclic_reduce() const;

    /// Canonical representative of the cyclic word: minimal rotation of
    /// the cyclic reduction, optionally minimized over inversion too.
    GroupWord canonical_cyclic(bool up_to_inversion) const;

    bool cyclically_equal(const GroupWord& o, bool up_to_inversion) const;

    std::string str(const std::map<uint32_t, std::string>* names = nullptr) const;

    friend bool operator==(const GroupWord& a, const GroupWord& b) { return a.ls_ == b.ls_; }
    friend bool operator<(const GroupWord& a, const GroupWord& b) { return a.ls_ < b.ls_; }

private:
    std::vector<GroupLetter> ls_;
};

struct DehnEdge {
    int from = 0;
    int to = 0;
    Gen label;
};

struct FaceStep {
    int edge = 0;
    int sign = 1; // +1 along the edge orientation, -1 against
};

using FaceWalk = std::vector<FaceStep>;

/// Combinatorial planar complex: directed labeled edges, bounded faces
/// and the outer face as closed walks. Every edge must occur exactly
/// twice across all faces, once per direction.
struct DehnDiagram {
    std::string name;
    int vertex_count = 0;
    std::vector<DehnEdge> edges;
    std::vector<FaceWalk> bounded_faces;
    FaceWalk outer_face;
    std::map<uint32_t, std::string> label_names; // gen code -> display label

    int add_vertex() { return vertex_count++; }
    int add_edge(int from, int to, Gen label);
    std::string label_of(Gen x) const;
};

/// Boundary word of a face, read from the walk's start.
GroupWord face_word(const DehnDiagram& d, const FaceWalk& face);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> issues;
    GroupWord outer_word; // canonical cyclic form
    size_t total_boundary_length = 0;
    size_t edge_count = 0;

    void fail(std::string what) {
        ok = false;
        issues.push_back(std::move(what));
    }
};

/// Checks the structural invariants, then that every bounded face word
/// is one of the relators up to cyclic rotation, free reduction and
/// inversion; records the outer word in canonical cyclic form.
ValidationReport validate(const DehnDiagram& d, const std::vector<GroupWord>& relators);

/// Line-oriented text form: vertices <n> / edge <from> <to> <label> /
/// face <step>... / outer <step>..., where a step is [-]<edge index>.
std::string to_dsl(const DehnDiagram& d);
DehnDiagram from_dsl(const std::string& text);

/// Glue two diagrams along identified vertices/edges (maps from d2 ids
/// to d1 ids). Bounded faces are kept; the new outer walk is stitched
/// from the edge slots no bounded face uses. Errors if the stitching is
/// ambiguous or the leftover slots do not form one closed walk.
DehnDiagram glue(const DehnDiagram& d1, const DehnDiagram& d2,
                 const std::map<int, int>& vertex_map, const std::map<int, int>& edge_map);

} // namespace rotlab
