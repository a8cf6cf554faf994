#pragma once

#include "rotlab/dehn.hpp"

namespace rotlab {

/// A builtin diagram together with the relator set of the result it
/// proves; validate(diagram, relators) must pass and the outer word is
/// the conclusion.
struct Figure {
    DehnDiagram diagram;
    std::vector<GroupWord> relators;
    GroupWord expected_outer; // conclusion, up to rotation/inversion
};

Figure figure_1();
Figure figure_2(int n); // n >= 3
Figure figure_3();
Figure figure_4();
Figure figure_5(int n); // n >= 4

/// Catalog for the CLI: ids "1", "2:<n>", "3", "4", "5:<n>".
Figure figure_by_id(const std::string& id);
std::vector<std::string> default_figure_ids();

} // namespace rotlab
