#ifndef TENSORGRAPH_BUBBLES_HPP
#define TENSORGRAPH_BUBBLES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tensorgraph/core.hpp"
#include "tensorgraph/topology.hpp"

namespace tensorgraph {

/// Self-contained copy of a bubble, by labels.
struct DetachedBubble {
    std::vector<ColorId> colors;
    std::vector<std::string> vertices;
    std::vector<ColoredEdgeSpec> edges;
};

/// A connected component of the subgraph over `colors`. Refers into its
/// parent graph, which must outlive it.
class Bubble {
public:
    Bubble(const ColoredGraph& parent, ColorSet colors, Component component)
        : parent_(&parent), colors_(colors), component_(std::move(component))
    {
    }

    const ColoredGraph& parent() const { return *parent_; }
    ColorSet colors() const { return colors_; }
    const std::vector<std::size_t>& vertices() const { return component_.vertices; }
    const std::vector<std::size_t>& edges() const { return component_.edges; }
    /// Least vertex label, the ordering key within one color subset.
    const std::string& least_label() const;

    DetachedBubble detach() const;

private:
    const ColoredGraph* parent_;
    ColorSet colors_;
    Component component_;
};

/// All bubbles over color subsets of cardinal k. Subsets come in lexicographic
/// order; bubbles of one subset are sorted by least vertex label.
std::vector<Bubble> enumerate_bubbles(const ColoredGraph& g, int k = 3);
std::vector<Bubble> enumerate_bubbles(ColoredGraph&&, int = 3) = delete;

/// Ribbon counts of a bubble. Faces follow the rotation given by the bubble's
/// colors in ascending cyclic order at whites and descending at blacks, which
/// for three colors is exactly the set of bicolored cycles.
RibbonCounts bubble_ribbon(const Bubble& b);

struct BubbleRecord {
    Bubble bubble;
    RibbonCounts counts;
    int genus = 0;
    bool planar = true;
};

struct BubbleCensus {
    std::vector<BubbleRecord> records;
    std::size_t total = 0;
    std::size_t planar_count = 0;
    std::map<int, std::size_t> genus_histogram;
};

BubbleCensus bubble_census(const ColoredGraph& g, int k = 3);
BubbleCensus bubble_census(ColoredGraph&&, int = 3) = delete;

} // namespace tensorgraph

#endif // TENSORGRAPH_BUBBLES_HPP
