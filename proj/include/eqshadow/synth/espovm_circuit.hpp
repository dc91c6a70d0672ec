#pragma once

#include "eqshadow/eqcore/label.hpp"
#include "eqshadow/qsim/circuit.hpp"

namespace eqshadow {

enum class MeasurementForm {
  Standard,  // CZ layers, phase layer, H layer, Z measurement
  Bases,     // CZ layers, then X/Y measurements with outcome flips
};

// Circuit whose Z-basis outcome p has probability <phi_{A+2D(p)}|rho|phi_{A+2D(p)}>.
Circuit espovm_measurement_circuit(const EqLabel& a, MeasurementForm form = MeasurementForm::Standard);

// CZ gates of the label packed into layers by edge colouring.
std::vector<Layer> cz_layers(const EqLabel& a);

// Packs gates into layers as early as possible, keeping the order of gates
// that share a qubit.
Circuit schedule_asap(int n, const std::vector<Gate>& gates);

}  // namespace eqshadow
