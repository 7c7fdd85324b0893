// Copyright 2026 The foldkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "foldkit/transforms.hpp"

namespace foldkit {

/// Storage window of one folded variable. The value occupies a register
/// over the half-open window [t_input, t_output); zero-length windows
/// need no storage at all.
struct LifetimeInterval {
    std::string variable;  // producing node id
    long long t_input = 0;
    long long t_output = 0;

    long long length() const { return t_output - t_input; }
};

struct LifetimeTable {
    std::vector<LifetimeInterval> intervals;
    int frame = 1;  // N; the schedule repeats every `frame` cycles
};

/// Birth/death of every compute node's result: t_input = fold order + unit
/// pipeline stages, t_output = t_input + max outgoing connection delay
/// (0 when nothing downstream stores it).
LifetimeTable lifetime_table(const FoldedArch& arch);

/// Peak number of simultaneously live variables over the periodic
/// steady-state schedule (every frame spawns a fresh instance of each
/// interval, frame-shifted by N).
long long max_live(const LifetimeTable& table);

/// True when no periodic instance of `a` overlaps any instance of `b`.
bool intervals_disjoint(const LifetimeInterval& a, const LifetimeInterval& b, int frame);

struct RegisterAllocation {
    /// Zero-length variables carry no entry.
    std::map<std::string, int> assignment;
    int register_count = 0;
};

/// Deterministic first-fit over intervals sorted by birth then variable
/// id, sharing a register only between periodically disjoint windows.
/// For windows no longer than one frame the count equals max_live; a
/// window longer than the frame overlaps its own next instance and gets a
/// dedicated register (storing it fully would need a forwarding
/// allocator, which this pass does not attempt).
RegisterAllocation allocate_registers(const LifetimeTable& table);

/// Aligned two-column text ("Nodes", "T_Input to T_Output").
std::string lifetime_text(const LifetimeTable& table);
/// CSV: node,t_input,t_output.
std::string lifetime_csv(const LifetimeTable& table);

}  // namespace foldkit
