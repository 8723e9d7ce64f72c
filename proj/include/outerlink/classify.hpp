#pragma once

// Five-way classification: a graph is intrinsically S^1-linked exactly when
// it is not outerplanar, and intrinsically outer-linked exactly when it is
// not planar (planar graphs being precisely the outer-flat, outer-linkless
// ones).

#include <optional>
#include <stdexcept>

#include "outerlink/outer_diagram.hpp"
#include "outerlink/planarity.hpp"
#include "outerlink/s1_link.hpp"

namespace outerlink {

struct ClassificationReport {
  bool outerplanar = false;
  bool planar = false;
  bool intrinsically_s1_linked = false;
  bool intrinsically_outer_linked = false;
  bool outer_flat_and_linkless = false;

  PlanarityResult planarity;
  OuterplanarityResult outerplanarity;
  std::optional<CyclicOrder> linkless_order;         // when outerplanar
  std::optional<CyclicOrder> sample_order;           // when not outerplanar
  std::optional<EdgePairLink> sample_link;           //   ... and its link
  std::optional<OuterDiagram> linkless_diagram;      // planar, two-page found
  std::optional<OuterDiagram> sample_diagram;        // when not planar
  std::optional<CycleEdgeLink> sample_outer_link;    //   ... and its link
  bool brute_force_checked = false;
};

// Raised when two independent decision routes disagree.
class CrossValidationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Cycle enumeration for sample outer links grows quickly with density.
inline constexpr int kSampleDiagramMaxOrder = 8;

inline ClassificationReport classify(const Graph& g) {
  ClassificationReport r;
  r.planarity = is_planar(g);
  r.outerplanarity = is_outerplanar(g);
  r.planar = r.planarity.planar;
  r.outerplanar = r.outerplanarity.outerplanar;
  r.intrinsically_s1_linked = !r.outerplanar;
  r.intrinsically_outer_linked = !r.planar;
  r.outer_flat_and_linkless = r.planar;
  if (r.outerplanar && !r.planar)
    throw CrossValidationError("outerplanar graph reported non-planar");

  if (r.outerplanar) {
    r.linkless_order = CyclicOrder(r.outerplanarity.boundary_order);
    if (find_nonsplit_link(*r.linkless_order, g))
      throw CrossValidationError("boundary order of an outerplanar embedding has a link");
  } else {
    r.sample_order = natural_order(g.order());
    r.sample_link = find_nonsplit_link(*r.sample_order, g);
    if (!r.sample_link)
      throw CrossValidationError("non-outerplanar graph has a linkless cyclic order");
  }

  if (g.order() <= kBruteForceMaxOrder) {
    S1Decision d = is_intrinsically_s1_linked_bruteforce(g);
    r.brute_force_checked = true;
    if (d.intrinsically_linked != r.intrinsically_s1_linked)
      throw CrossValidationError("brute-force S^1 decision disagrees with outerplanarity");
  }

  if (r.planar) {
    r.linkless_diagram = two_page_linkless_diagram(g);
    if (r.linkless_diagram && g.order() <= kSampleDiagramMaxOrder &&
        find_nonsplit_outer_link(*r.linkless_diagram))
      throw CrossValidationError("two-page diagram contains a non-split link");
  } else if (g.order() <= kSampleDiagramMaxOrder) {
    r.sample_diagram = convex_diagram(g, natural_order(g.order()));
    r.sample_outer_link = find_nonsplit_outer_link(*r.sample_diagram);
    if (!r.sample_outer_link)
      throw CrossValidationError("diagram of a non-planar graph has no non-split link");
  }
  return r;
}

}  // namespace outerlink
