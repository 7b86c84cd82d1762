#pragma once

#include <string>

#include "awgraph/graph.hpp"
#include "awgraph/pipeline.hpp"

inline awgraph::Graph fixture(const std::string& name)
{
    return awgraph::load_graph_file(std::string(AWGRAPH_TEST_DATA) + "/" + name, awgraph::GraphFormat::EdgeList);
}

// The family graphs on which the full pipeline is expected to succeed.
struct FamilyCase {
    awgraph::Family family;
    int size;
};

inline const FamilyCase kFamilyGraphs[] = {
    {awgraph::Family::Cycle, 6},  {awgraph::Family::Cycle, 8},  {awgraph::Family::Cycle, 10},
    {awgraph::Family::Cycle, 12}, {awgraph::Family::Cycle, 14}, {awgraph::Family::Cycle, 16},
    {awgraph::Family::Crown, 5},  {awgraph::Family::Crown, 6},  {awgraph::Family::Crown, 7},
    {awgraph::Family::Hadamard, 8},
};
