#pragma once

#include <iosfwd>
#include <string>

#include "flowkit/network.hpp"

namespace flowkit {

/// Reads the DIMACS max-flow text format:
///
///     c <comment>
///     p max <n> <m>
///     n <id> s
///     n <id> t
///     a <u> <v> <cap>
///
/// Ids are 1-based on disk; `<cap>` is a non-negative integer or `p/q`.
/// Throws ParseError (with line number) or FlowError from Network::build.
Network read_dimacs(std::istream& in, bool allow_antiparallel = false);

/// Writes the stored (post-subdivision) network.
void write_dimacs(std::ostream& out, const Network& net, const std::string& comment = {});

/// One `f <u> <v> <value>` line per arc carrying positive flow, then `s <|f|>`.
void write_flow(std::ostream& out, const Network& net, const FlowAssignment& f);

/// Inverse of write_flow; arcs not listed carry zero.
FlowAssignment read_flow(std::istream& in, const Network& net);

}  // namespace flowkit
