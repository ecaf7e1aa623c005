#pragma once

#include <string>
#include <vector>

#include "braidforms/braid.hpp"
#include "braidforms/laurent.hpp"

namespace braidforms {

// Closed Legendrian fronts encoded as event words over a live list of
// strands, positions numbered 1..k from the top:
//   Birth(i)  inserts two new strands at positions i, i+1 (a left cusp)
//   Cross(i)  swaps the strands at positions i, i+1
//   Death(i)  removes the strands at positions i, i+1 (a right cusp)

enum class EventType { Birth, Cross, Death };

struct FrontEvent {
    EventType type;
    int pos;  // 1-based
    bool operator==(const FrontEvent&) const = default;
};

struct FrontDiagram {
    std::vector<FrontEvent> events;
    // Components to flip, 1-based in order of first appearance. Without
    // overrides every component is oriented by the default rule: the
    // physically lower strand of its first birth points rightward.
    std::vector<int> flipped_components;

    // Text form: whitespace-separated "B{i}" / "X{i}" / "D{i}" tokens.
    static FrontDiagram parse(const std::string& text);
    std::string render() const;

    bool operator==(const FrontDiagram&) const = default;
};

struct FrontStats {
    int cusp_pairs = 0;  // C: number of left (= right) cusps
    int writhe = 0;
    int tb = 0;  // writhe - C
    int components = 0;
    std::vector<int> crossing_signs;  // per crossing, in event order
};

// Checks event legality and closure, propagates orientations along each
// component, and derives crossing signs (+1 exactly when the two strands
// share a horizontal direction, the front-projection sign rule).
FrontStats validate_and_orient(const FrontDiagram& f);

struct Ruling {
    std::vector<int> switches;  // crossing ordinals, 0-based in event order
    int theta = 0;              // C - |switches|
};

struct RulingSet {
    std::vector<Ruling> rulings;
    LaurentPoly2 polynomial;  // sum of z^{1-theta}, univariate in z
};

// Explicit depth-first enumeration of all oriented rulings. Switches are
// admitted only at positive crossings between strands of different eyes
// whose vertical extents at the crossing are disjoint or nested.
RulingSet enumerate_rulings(const FrontDiagram& f);

// Ruling polynomial by the same sweep, memoized on (event index, pairing).
LaurentPoly2 ruling_polynomial(const FrontDiagram& f);

// Combinatorial tangle realizing the negative permutation braid nu_pi as a
// front fragment: consumes 2n live strands (n uppers above n lowers, the
// lowers ordered n..1 from the top) with inversions(pi) crossings, all
// negative, and n right cusps.
std::vector<FrontEvent> t_tangle_subword(const Permutation& pi);

// Closed front for the closure of nu_pi nu_kappa^*: the mirrored kappa
// tangle (events reversed, births for deaths) glued to the pi tangle.
FrontDiagram closure_two_perms(const Permutation& pi, const Permutation& kappa);

// Closed front for the closure of beta nu_pi^* = beta nu_{pi^{-1}}, beta a
// positive braid drawn on the lower strands: braid strand i runs along
// front position 2n-i, so sigma_i embeds as Cross(2n-i).
FrontDiagram closure_pos_braid(const BraidWord& beta, const Permutation& pi);

// Static figure in Figure-2 style: cusps as horizontal tangencies, the
// lower-slope strand drawn over at crossings, orientation arrows.
std::string render_svg(const FrontDiagram& f);

}  // namespace braidforms
