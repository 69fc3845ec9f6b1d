#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "wig/cactus.hpp"
#include "wig/circular_arc.hpp"
#include "wig/interval.hpp"
#include "wig/permutation.hpp"
#include "wig/trapezoid.hpp"

namespace wig {

enum class GraphClass { Cactus, Interval, CircularArc, Permutation, Trapezoid };

// "cactus", "interval", "circular-arc", "permutation", "trapezoid"
const char* class_name(GraphClass cls);
GraphClass class_from_name(std::string_view name); // throws std::invalid_argument

// One graph in the line-oriented exchange format:
//
//   wig 1 <class>
//   <header>          n | "n C" (circular-arc) | "n m" (cactus)
//   <payload>         per-class lines, see parse_document
//
// The format is canonical: LF line ends, single spaces, plain decimal
// integers, final newline, nothing after the payload. parse_document accepts
// exactly what serialize_document emits.
struct InputDocument {
    GraphClass cls = GraphClass::Interval;
    std::variant<CactusRep, IntervalRep, ArcRep, PermutationRep, TrapezoidRep> rep;

    int n() const;
};

InputDocument parse_document(std::string_view text); // throws ParseError
std::string serialize_document(const InputDocument& doc);

InputDocument load_document(const std::string& path);
void save_document(const InputDocument& doc, const std::string& path);

} // namespace wig
