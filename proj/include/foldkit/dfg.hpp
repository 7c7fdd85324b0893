// Copyright 2026 The foldkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace foldkit {

enum class NodeOp { Input, Output, Add, Gain };

/// Node operation plus its static parameters. Gains are power-of-two
/// shifts (multiply by 2^shift, shift may be negative), which keeps every
/// architecture multiplier-free.
struct NodeKind {
    NodeOp op = NodeOp::Add;
    int shift = 0;  // Gain only

    static NodeKind input() { return {NodeOp::Input, 0}; }
    static NodeKind output() { return {NodeOp::Output, 0}; }
    static NodeKind add() { return {NodeOp::Add, 0}; }
    static NodeKind gain(int k) { return {NodeOp::Gain, k}; }

    bool is_compute() const { return op == NodeOp::Add || op == NodeOp::Gain; }
    int in_ports() const;
    int out_ports() const;

    /// "input", "output", "add", "gain:<k>".
    std::string name() const;
    /// Kind family without parameters: "input", "output", "add", "gain".
    std::string family() const;

    friend bool operator==(const NodeKind&, const NodeKind&) = default;
};

struct DfgNode {
    std::string id;
    NodeKind kind;
    int latency = 0;  // abstract time units per evaluation

    DfgNode() = default;
    DfgNode(std::string id_, NodeKind kind_)
        : id(std::move(id_)), kind(kind_), latency(kind_.is_compute() ? 1 : 0) {}
    DfgNode(std::string id_, NodeKind kind_, int latency_)
        : id(std::move(id_)), kind(kind_), latency(latency_) {}

    friend bool operator==(const DfgNode&, const DfgNode&) = default;
};

struct PortRef {
    std::string node;
    int port = 0;

    friend bool operator==(const PortRef&, const PortRef&) = default;
};

/// Directed edge carrying `delays` sample registers. Parallel edges between
/// the same node pair are legal and distinguished by id.
struct DfgEdge {
    std::string id;
    PortRef src;  // out-port
    PortRef dst;  // in-port
    int delays = 0;  // w(e) >= 0

    friend bool operator==(const DfgEdge&, const DfgEdge&) = default;
};

struct Diagnostic {
    enum class Code {
        DuplicateId,
        UnknownNode,
        BadPort,
        BadShift,
        NegativeDelay,
        MultipleDrivers,
        DanglingPort,
        CombinationalLoop,
        NoInput,
        NoOutput,
    };
    Code code;
    std::string message;
};

std::string_view to_string(Diagnostic::Code code);

class Dfg;

struct ValidationResult {
    std::optional<Dfg> graph;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return graph.has_value(); }
};

/// Checks every structural invariant (driven in-ports, no zero-weight
/// cycles, unique ids, at least one input and output) and either returns
/// an immutable graph or the full diagnostic list.
ValidationResult validate(std::vector<DfgNode> nodes, std::vector<DfgEdge> edges);

/// validate(), throwing ValidationError on any diagnostic.
Dfg validate_or_throw(std::vector<DfgNode> nodes, std::vector<DfgEdge> edges);

/// Immutable validated dataflow graph. Safe to share across threads; all
/// operations on it are pure.
class Dfg {
public:
    const std::vector<DfgNode>& nodes() const { return nodes_; }
    const std::vector<DfgEdge>& edges() const { return edges_; }

    bool has_node(std::string_view id) const;
    const DfgNode& node(std::string_view id) const;    // throws Error if absent
    const DfgEdge& edge(std::string_view id) const;    // throws Error if absent
    const DfgEdge* find_edge(std::string_view id) const;

    /// In-edges sorted by destination port.
    std::vector<const DfgEdge*> in_edges(std::string_view node_id) const;
    std::vector<const DfgEdge*> out_edges(std::string_view node_id) const;
    const DfgEdge* in_edge_on_port(std::string_view node_id, int port) const;

    std::vector<std::string> input_ids() const;
    std::vector<std::string> output_ids() const;
    std::vector<std::string> compute_ids() const;

    /// Total sample registers, i.e. the sum of edge delay counts.
    long long total_delays() const;

    friend bool operator==(const Dfg& a, const Dfg& b) {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    friend ValidationResult validate(std::vector<DfgNode>, std::vector<DfgEdge>);
    Dfg(std::vector<DfgNode> nodes, std::vector<DfgEdge> edges);

    std::vector<DfgNode> nodes_;
    std::vector<DfgEdge> edges_;
    std::map<std::string, std::size_t, std::less<>> node_index_;
    std::map<std::string, std::size_t, std::less<>> edge_index_;
    std::map<std::string, std::vector<std::size_t>, std::less<>> in_adj_;
    std::map<std::string, std::vector<std::size_t>, std::less<>> out_adj_;
};

struct CriticalPath {
    std::vector<std::string> nodes;
    int length = 0;  // sum of node latencies along the path
};

/// Longest path that uses only zero-delay edges, measured as the sum of
/// node latencies. Ties resolve to the lexicographically smallest node-id
/// sequence (a proper prefix sorts before its extensions).
CriticalPath critical_path(const Dfg& dfg);

/// Edge ids, kept sorted.
using CutSet = std::vector<std::string>;

/// True when the set is a feed-forward cut: some node partition puts every
/// input on one side and every output on the other, the set is exactly the
/// edges crossing the partition, and no edge crosses backwards (so every
/// input->output path, and every cycle, meets the set forward-only, paths
/// exactly once).
bool is_feedforward_cutset(const Dfg& dfg, const CutSet& cut);

struct CutSetDiagnosis {
    bool ok = false;
    std::string reason;
    std::vector<std::string> witness_path;  // node ids, when a path witnesses the failure
    int crossings = -1;                     // crossings of the witness path
};

CutSetDiagnosis diagnose_cutset(const Dfg& dfg, const CutSet& cut);

/// Every feed-forward cut-set of the graph, sorted by cardinality then
/// lexicographic edge ids, truncated to `max_results`. Exhaustive for
/// graphs with at most 20 edges; beyond that enumeration stops after a
/// fixed work budget.
std::vector<CutSet> feedforward_cutsets(const Dfg& dfg, std::size_t max_results = 64);

}  // namespace foldkit
