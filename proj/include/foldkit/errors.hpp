// Copyright 2026 The foldkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace foldkit {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text-format error; `line` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(int line_no, const std::string& what)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
    int line = 0;
};

/// Raised by the throwing wrappers around graph validation.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> messages)
        : Error(join(messages)), diagnostics(std::move(messages)) {}
    std::vector<std::string> diagnostics;

private:
    static std::string join(const std::vector<std::string>& msgs) {
        std::string out;
        for (const auto& m : msgs) {
            if (!out.empty()) out += "; ";
            out += m;
        }
        return out.empty() ? "invalid graph" : out;
    }
};

/// A folding spec references (or misses) a node the operation needs.
class UnmappedNodeError : public Error {
public:
    explicit UnmappedNodeError(std::string node_id)
        : Error("node '" + node_id + "' is not mapped by any folding set"),
          node(std::move(node_id)) {}
    std::string node;
};

/// Folding produced negative delays; lists every offending edge.
class FoldingInfeasibleError : public Error {
public:
    explicit FoldingInfeasibleError(std::vector<std::pair<std::string, long long>> edges)
        : Error(describe(edges)), negative_edges(std::move(edges)) {}
    std::vector<std::pair<std::string, long long>> negative_edges;

private:
    static std::string describe(const std::vector<std::pair<std::string, long long>>& edges) {
        std::string out = "folding infeasible, negative delays:";
        for (const auto& [id, d] : edges) out += " " + id + "=" + std::to_string(d);
        return out;
    }
};

/// Cut-set violates the exactly-once forward-crossing property.
class InvalidCutSetError : public Error {
public:
    InvalidCutSetError(std::string reason, std::vector<std::string> path, int crossing_count)
        : Error(std::move(reason)), witness_path(std::move(path)), crossings(crossing_count) {}
    std::vector<std::string> witness_path;  // node ids of a violating input->output path
    int crossings = 0;
};

/// Exhaustive enumeration refused; message names the bound.
class TooLargeError : public Error {
public:
    using Error::Error;
};

/// A stimulus (or fixed-point config) field violates its invariant.
class BadSpecError : public Error {
public:
    BadSpecError(std::string field_name, const std::string& what)
        : Error(field_name + ": " + what), field(std::move(field_name)) {}
    std::string field;
};

/// Equivalence checking could not align two traces.
class NoAlignmentError : public Error {
public:
    using Error::Error;
};

}  // namespace foldkit
