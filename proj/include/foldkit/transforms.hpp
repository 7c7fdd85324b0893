// Copyright 2026 The foldkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foldkit/dfg.hpp"

namespace foldkit {

/// One hardware unit and the nodes it executes, by slot. Position u in
/// `slots` is the fold order: the node runs at cycles l*N + u. Empty string
/// marks an idle slot.
struct FoldingUnit {
    std::string id;
    std::vector<std::string> slots;

    friend bool operator==(const FoldingUnit&, const FoldingUnit&) = default;
};

struct FoldingSpec {
    int factor = 1;  // N, cycles per input sample
    std::vector<FoldingUnit> units;
    std::map<std::string, int> pipeline_stages;  // kind family -> P, default 1

    int stages_for(const NodeKind& kind) const;
    /// (unit id, slot) of a node, or nullopt when unmapped.
    std::optional<std::pair<std::string, int>> placement(std::string_view node_id) const;
    const FoldingUnit* find_unit(std::string_view unit_id) const;

    friend bool operator==(const FoldingSpec&, const FoldingSpec&) = default;
};

/// Shape checks of a spec against its graph: every compute node mapped
/// exactly once, slot lists within the factor, one kind per unit.
/// Throws UnmappedNodeError or Error.
void check_spec(const Dfg& dfg, const FoldingSpec& spec);

/// N*w(e) - P_u + v - u for a compute->compute edge. May be negative;
/// feasibility is the caller's concern. Throws UnmappedNodeError when an
/// endpoint is missing from every folding set.
long long folded_edge_delay(const Dfg& dfg, const DfgEdge& edge, const FoldingSpec& spec);

/// Connection of the folded machine for one source edge. Unit->unit
/// connections carry the folding-equation delay; input-sourced connections
/// carry N*w + v cycles measured from the frame in which the sample is
/// latched; edges into output nodes are also listed (delay N*w) with the
/// capture schedule kept in OutputTap.
struct FoldedConnection {
    std::string edge_id;
    std::string producer;  // unit id, or input node id when from_input
    bool from_input = false;
    std::string consumer;  // unit id, or output node id when to_output
    bool to_output = false;
    int dst_port = 0;
    int consume_slot = 0;  // fold order of the destination node
    long long delay = 0;   // cycles
};

/// Where and when one output node's samples appear. The sample stream is
/// read from a hold register once per frame; `latency_samples` is the
/// sample-index offset between that stream and the unfolded output.
struct OutputTap {
    std::string output_node;
    std::string producer_unit;  // empty when fed directly by an input
    std::string producer_node;
    int capture_slot = 0;
    long long latency_samples = 0;
};

class FoldedArch {
public:
    FoldedArch(Dfg source, FoldingSpec spec, std::vector<FoldedConnection> connections,
               std::vector<OutputTap> outputs);

    const Dfg& source() const { return source_; }
    const FoldingSpec& spec() const { return spec_; }
    int factor() const { return spec_.factor; }
    const std::vector<FoldedConnection>& connections() const { return connections_; }
    const std::vector<OutputTap>& outputs() const { return outputs_; }

    const FoldedConnection& connection_for(std::string_view edge_id) const;
    long long delay_of(std::string_view edge_id) const;
    const OutputTap& tap_for(std::string_view output_node) const;

    std::size_t unit_count() const { return spec_.units.size(); }
    /// Units whose slots hold the given kind family ("add", "gain").
    std::size_t unit_count(std::string_view family) const;
    /// Latency of the first output node, the analytic offset used by
    /// equivalence checking.
    long long output_latency_samples() const;

private:
    Dfg source_;
    FoldingSpec spec_;
    std::vector<FoldedConnection> connections_;
    std::vector<OutputTap> outputs_;
};

/// Time-multiplexes the graph onto the spec's units. Every connection
/// delay must come out non-negative; otherwise FoldingInfeasibleError
/// lists each offending edge with its value.
FoldedArch fold(const Dfg& dfg, const FoldingSpec& spec);

struct PipelineResult {
    Dfg graph;
    int inserted_registers = 0;
    int stage_count = 2;
    int added_latency = 0;  // samples, identical on every input->output path
};

/// Adds `registers_per_edge` delay registers to every cut-set edge.
/// The source graph is untouched. Throws InvalidCutSetError (with a
/// witnessing path) when the set is not a feed-forward cut.
PipelineResult pipeline(const Dfg& dfg, const CutSet& cut, int registers_per_edge = 1);

/// All slot orderings of the given unit grouping (product of per-unit
/// placements) whose folded delays are all non-negative, sorted by total
/// folded delay then lexicographic spec text. Exhaustive up to 8 compute
/// nodes; beyond that throws TooLargeError naming the bound.
std::vector<FoldingSpec> search_folding_orders(
    const Dfg& dfg, int factor, const std::map<std::string, std::string>& unit_of_node,
    const std::map<std::string, int>& pipeline_stages = {});

}  // namespace foldkit
