#pragma once

#include "ecl/coloring.hpp"
#include "ecl/multigraph.hpp"

namespace ecl {

struct ColorerResult {
    PartialColoring coloring;
    int exact_fallbacks = 0;  // times fan/Kempe augmentation gave up
};

// Incremental edge coloring with k colors: fan rotation plus Kempe swaps,
// falling back to the exact decision when augmentation fails. Total success
// is guaranteed whenever k >= Dmu(g).
ColorerResult color_with_k(const Multigraph& g, int k);

ColorerResult color_vizing(const Multigraph& g);  // k = Delta(G) + mu(G)
ColorerResult color_ore(const Multigraph& g);     // k = Dmu(G)

// True iff collapsing parallel classes of G* leaves a forest (no cycle of
// length greater than 2).
bool check_star_forest_hypothesis(const Multigraph& g);

// k = Dmu(G) - 1 coloring under the star-forest hypothesis: peel one parallel
// copy at a leaf of the max-degree/max-multiplicity core, color the peeled
// graph, then re-add the peeled edges by augmentation.
ColorerResult color_forest_bound(const Multigraph& g);

}  // namespace ecl
