#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sg/signed_graph.hpp"

namespace sg::harness {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// Line-oriented text format, bit-exact round trip:
//   sg 1
//   n <order>
//   e <u> <v> <+|->
//   l <v> <label>
//   # comment
SignedGraph parse_graph(std::string_view text);
std::string serialize_graph(const SignedGraph& g);

// JSON mirror of the same schema ({"format":"sg","version":1,...}).
SignedGraph parse_graph_json(std::string_view text);
std::string serialize_graph_json(const SignedGraph& g);

SignedGraph load_graph_file(const std::string& path); // sniffs json vs text
void save_graph_file(const SignedGraph& g, const std::string& path, bool json = false);

} // namespace sg::harness
