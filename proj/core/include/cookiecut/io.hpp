#pragma once

#include <string>

#include "cookiecut/types.hpp"

namespace cookiecut {

// Instance file: { "m": int, "cookies": [ [q, ...], ... ] } where q is an
// integer, a decimal literal (parsed exactly), or an "a/b" string.
// Allocation file: { "r": int, "shares": [ [ [agent, "a/b"], ... ], ... ] }.
// Rationals always serialize as canonical lowest-terms "a/b".

struct ParsedInstance {
  Instance instance;
  bool had_decimals = false;  // any amount written as a decimal literal
};

ParsedInstance instance_from_json(const std::string& text);
ParsedInstance read_instance(const std::string& path);
std::string instance_to_json(const Instance& instance);
void write_instance(const std::string& path, const Instance& instance);

Allocation allocation_from_json(const std::string& text);
Allocation read_allocation(const std::string& path);
std::string allocation_to_json(const Allocation& alloc);
void write_allocation(const std::string& path, const Allocation& alloc);

}  // namespace cookiecut
