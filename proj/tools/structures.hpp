#pragma once

// Structure arguments on the command line: either a JSON file or one of
//   quotient:Q:D   F_Q modulo its subgroup of order D
//   field:Q        F_Q as a hyperfield
//   ext:Q:N        F_{Q^N} modulo F_Q^x
//   group:SPEC     H_G for G given as 4, C4, 2x2 or C2xC2
//   abelian:SPEC   the group G itself, over {1, mul, inv}
//   krasner        the two-element hyperfield

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperforge/errors.hpp"
#include "hyperforge/json_io.hpp"
#include "hyperforge/logic/structure.hpp"

namespace hyperforge::cli {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep)) out.push_back(part);
    return out;
}

inline std::uint64_t parse_count(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw PreconditionError(std::string("expected a positive integer for ") + what + ", got '" + s + "'");
    }
    return std::stoull(s);
}

inline FiniteAbelianGroup parse_group(const std::string& spec) {
    std::vector<std::uint64_t> orders;
    for (auto part : split(spec, 'x')) {
        if (!part.empty() && (part[0] == 'C' || part[0] == 'c')) part.erase(0, 1);
        orders.push_back(parse_count(part, "a cyclic factor"));
    }
    if (orders.empty()) throw PreconditionError("empty group description");
    return FiniteAbelianGroup(orders);
}

inline io::Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open '" + path + "'");
    try {
        return io::Json::parse(in);
    } catch (const io::Json::parse_error& e) {
        throw MalformedError(path + ": " + e.what());
    }
}

struct LoadedStructure {
    std::optional<FiniteHyperfield> hyperfield; // absent for group views
    logic::FiniteStructure view;
};

inline FiniteHyperfield load_hyperfield(const std::string& arg, std::uint64_t field_bound) {
    const auto parts = split(arg, ':');
    const std::string& kind = parts.empty() ? arg : parts[0];
    auto need = [&](std::size_t n) {
        if (parts.size() != n) throw PreconditionError("malformed structure descriptor '" + arg + "'");
    };
    if (kind == "quotient") {
        need(3);
        return krasner_quotient(make_finite_field(parse_count(parts[1], "q"), field_bound), parse_count(parts[2], "the subgroup order"));
    }
    if (kind == "field") {
        need(2);
        return krasner_quotient(make_finite_field(parse_count(parts[1], "q"), field_bound), 1);
    }
    if (kind == "ext") {
        need(3);
        return extension_quotient(parse_count(parts[1], "q"), static_cast<int>(parse_count(parts[2], "n")), field_bound);
    }
    if (kind == "group") {
        need(2);
        return from_group(parse_group(parts[1]));
    }
    if (kind == "krasner") {
        need(1);
        return from_group(FiniteAbelianGroup());
    }
    return io::hyperfield_from_json(read_json_file(arg), std::filesystem::path(arg).filename().string());
}

inline LoadedStructure load_structure(const std::string& arg, std::uint64_t field_bound) {
    if (arg.rfind("abelian:", 0) == 0) {
        const auto g = parse_group(arg.substr(8));
        return {std::nullopt, logic::FiniteStructure::of(g)};
    }
    auto h = load_hyperfield(arg, field_bound);
    auto view = logic::FiniteStructure::of(h);
    return {std::move(h), std::move(view)};
}

} // namespace hyperforge::cli
