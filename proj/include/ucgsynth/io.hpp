#pragma once

#include <string>

#include "ucgsynth/circuit.hpp"
#include "ucgsynth/kgate.hpp"
#include "ucgsynth/target_vector.hpp"

namespace ucg {

// JSON round-trips for the on-disk formats. Circuits use one object per gate
// ({"kind":"cx","c":i,"t":j}, {"kind":"rz","q":i,"theta":f}, ...); controlled
// and uncontrolled block gates carry their angle block in "param" and the
// block family in "label" (a realization name, or h/s/sdg for fixed gates).
std::string circuit_to_json(const CircuitIR& c);
CircuitIR circuit_from_json(const std::string& text);

// {"n":…, "realization":"phase|rz|rx|ry|diag_m", "m":…, "chi":[…]}; diag_m
// entries are length-2^m arrays.
std::string target_vector_to_json(const TargetVector& tv);
TargetVector target_vector_from_json(const std::string& text);

// {"n":…, "realization":…, "gates":[{"controls":[{"q":i,"pol":"pos|neg"}…],
// "mu":…}…]}
std::string kgate_list_to_json(const KGateList& list);
KGateList kgate_list_from_json(const std::string& text);

std::string cost_to_json(const CostReport& r);

// QASM-like text: cx/rz/p/h/s/sdg natively, crz/cp for controlled z-type
// blocks, anything else as a named opaque gate declared at the top.
std::string to_qasm(const CircuitIR& c);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace ucg
