// Copyright 2026 The QPS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qps/builder.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qps/sine_identities.h"

namespace qps {

namespace {

constexpr double kPi = std::numbers::pi;
// R_y(2 * pi/6) puts sin(pi/6) = 1/2 on |1>.
constexpr double kConstantTermAngle = kPi / 3;
constexpr double kFaultOffset = 0.05;

/// Controls selecting module m: bits 0..m-1 clear and bit m set.
std::vector<Control> module_pattern(const QpsLayout &layout, int m) {
    std::vector<Control> out;
    for (int q = 0; q < m; q++) {
        out.push_back(neg(layout.b_bit(q)));
    }
    out.push_back(pos(layout.b_bit(m)));
    return out;
}

/// One rotation unit of the regrouped construction: the k-th sine term of
/// module m on pair t = n - k, gated by the single selector qubit `sel`.
///
/// With x the low k bits of the odd part i and `top` bit k of i, the target
/// amplitude is sin(pi x / 2^(k+1)) when top = 1 and cos(pi x / 2^(k+1)) when
/// top = 0. The rotations build the sine from the bits of x (bit 0 is always
/// set); the trailing NOT swaps it to the cosine when top is clear. B is only
/// read, so units of different modules can run side by side.
std::vector<Gate> swapped_sine_unit(const QpsLayout &layout, int m, int k, Qubit sel) {
    int n = layout.n;
    auto pair = layout.pair(n - k);
    std::vector<Gate> out;
    out.push_back(Gate::ry(kPi / std::ldexp(1.0, k), pair, {pos(sel)}));
    for (int b = 1; b < k; b++) {
        out.push_back(Gate::ry(kPi * std::ldexp(1.0, b - k), pair, {pos(sel), pos(layout.b_bit(m + b))}));
    }
    int top = m + k;
    if (top < n) {
        out.push_back(Gate::cnot(pair, {pos(sel), neg(layout.b_bit(top))}));
    } else {
        out.push_back(Gate::cnot(pair, {pos(sel)}));
    }
    return out;
}

/// The same term built from the complement of j. The numerator is
///     top ? x : 2^k - x  =  1 + sum_{b=1}^{k-1} y_b 2^b,   y_b = bit_b xor not(top),
/// so a fan-out of `top` onto bits m+1..m+k-1 turns every y_b into a negated
/// control, and the fan-out is undone afterwards.
std::vector<Gate> complemented_sine_unit(const QpsLayout &layout, int m, int k, Qubit sel) {
    int n = layout.n;
    auto pair = layout.pair(n - k);
    int top = m + k;
    std::vector<Qubit> locals;
    for (int b = 1; b < k; b++) {
        locals.push_back(layout.b_bit(m + b));
    }
    std::vector<Gate> out;
    bool fan_out = top < n && !locals.empty();
    if (fan_out) {
        out.push_back(Gate::cnot(locals, {pos(layout.b_bit(top))}));
    }
    out.push_back(Gate::ry(kPi / std::ldexp(1.0, k), pair, {pos(sel)}));
    for (int b = 1; b < k; b++) {
        out.push_back(Gate::ry(kPi * std::ldexp(1.0, b - k), pair, {pos(sel), neg(layout.b_bit(m + b))}));
    }
    if (fan_out) {
        out.push_back(Gate::cnot(locals, {pos(layout.b_bit(top))}));
    }
    return out;
}

void append_semantic_module(Circuit &circuit, const QpsLayout &layout, int m) {
    int n = layout.n;
    auto global = module_pattern(layout, m);
    for (int t = 0; t < std::min(m, n - 1); t++) {
        circuit.append(Gate::ry(kConstantTermAngle, layout.pair(t), global));
    }
    for (int t = m; t <= n - 2; t++) {
        int k = n - t;
        // The k-th term depends on bits m+1 .. m+k of j (bit m is fixed by the
        // selector); bits at or above n are zero.
        int last = std::min(m + k, n - 1);
        int free_bits = last - m;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << free_bits); a++) {
            auto controls = global;
            std::int64_t j = std::int64_t{1} << m;
            for (int b = 0; b < free_bits; b++) {
                bool set = (a >> b) & 1;
                Qubit q = layout.b_bit(m + 1 + b);
                controls.push_back(set ? pos(q) : neg(q));
                if (set) {
                    j |= std::int64_t{1} << (m + 1 + b);
                }
            }
            auto seq = inversion_angles(n, j);
            circuit.append(Gate::ry(2 * seq.angles[t], layout.pair(t), std::move(controls)));
        }
    }
}

void append_bitwise_module(Circuit &circuit, const QpsLayout &layout, int m) {
    int n = layout.n;
    Qubit sel = layout.b_bit(0);
    if (m > 0) {
        sel = layout.anc.offset;
        circuit.append(Gate::cnot({sel}, module_pattern(layout, m)));
    }
    for (int t = 0; t < std::min(m, n - 1); t++) {
        circuit.append(Gate::ry(kConstantTermAngle, layout.pair(t), {pos(sel)}));
    }
    for (int t = m; t <= n - 2; t++) {
        for (auto &g : complemented_sine_unit(layout, m, n - t, sel)) {
            circuit.append(std::move(g));
        }
    }
    if (m > 0) {
        circuit.append(Gate::cnot({sel}, module_pattern(layout, m)));
    }
}

void perturb_first_rotation(Circuit &circuit) {
    Circuit out(circuit.registers());
    bool done = false;
    for (auto g : circuit.gates()) {
        if (!done && g.kind == GateKind::kRotY) {
            g.angle += kFaultOffset;
            done = true;
        }
        out.append(std::move(g));
    }
    circuit = std::move(out);
}

}  // namespace

std::string mode_name(Mode mode) {
    return mode == Mode::kSerial ? "serial" : "parallel";
}

Mode parse_mode(const std::string &name) {
    if (name == "serial") {
        return Mode::kSerial;
    }
    if (name == "parallel") {
        return Mode::kParallel;
    }
    throw std::invalid_argument("unknown mode '" + name + "' (expected serial or parallel)");
}

std::string ry_name(RyConstruction ry) {
    return ry == RyConstruction::kSemantic ? "semantic" : "bitwise";
}

RyConstruction parse_ry(const std::string &name) {
    if (name == "semantic") {
        return RyConstruction::kSemantic;
    }
    if (name == "bitwise") {
        return RyConstruction::kBitwise;
    }
    throw std::invalid_argument("unknown rotation construction '" + name + "' (expected semantic or bitwise)");
}

void QpsConfig::validate() const {
    if (n < 2) {
        throw std::invalid_argument("n must be at least 2, got " + std::to_string(n));
    }
    if (n > 24) {
        throw std::invalid_argument("n is too large to build: " + std::to_string(n));
    }
    if (mode == Mode::kParallel && n < 3) {
        throw std::invalid_argument("parallel mode needs n >= 3 (register C has n-2 qubits)");
    }
    if (mode == Mode::kParallel && ry == RyConstruction::kSemantic) {
        throw std::invalid_argument("parallel mode is only available with the bitwise construction");
    }
}

QpsLayout QpsLayout::make(int n, Mode mode) {
    if (n < 2) {
        throw std::invalid_argument("layout needs n >= 2");
    }
    if (mode == Mode::kParallel && n < 3) {
        throw std::invalid_argument("parallel layout needs n >= 3");
    }
    QpsLayout l;
    l.n = n;
    l.mode = mode;
    l.b = {"B", n, 0};
    l.e = {"E", 2 * n - 2, n};
    l.anc = {"Anc", 1, 3 * n - 2};
    l.bc_aux = {"BCaux", 1, 3 * n - 1};
    if (mode == Mode::kParallel) {
        l.c = QubitRegister{"C", n - 2, 3 * n};
    }
    return l;
}

std::vector<QubitRegister> QpsLayout::registers() const {
    std::vector<QubitRegister> out{b, e, anc, bc_aux};
    if (c) {
        out.push_back(*c);
    }
    return out;
}

int QpsLayout::num_qubits() const {
    return 3 * n + (c ? c->width : 0);
}

Qubit QpsLayout::b_bit(int bit) const {
    return b.qubit(bit);
}

Qubit QpsLayout::msb_digit(int k) const {
    if (k < 1 || k > n) {
        throw std::out_of_range("digit index must be in 1..n");
    }
    return b.qubit(n - k);
}

std::vector<Qubit> QpsLayout::pair(int t) const {
    return {e.qubit(2 * t), e.qubit(2 * t + 1)};
}

Circuit QpsLayout::empty_circuit() const {
    return Circuit(registers());
}

DenseMatrix sine_transform_matrix(int n) {
    if (n < 1 || n > 12) {
        throw std::invalid_argument("sine transform matrix needs 1 <= n <= 12");
    }
    std::size_t grid = std::size_t{1} << n;
    double amp = std::sqrt(2 / static_cast<double>(grid));
    DenseMatrix m(grid);
    m(0, 0) = 1;
    for (std::size_t j = 1; j < grid; j++) {
        for (std::size_t k = 1; k < grid; k++) {
            std::size_t phase = (j * k) % (2 * grid);
            m(j, k) = amp * std::sin(static_cast<double>(phase) * kPi / static_cast<double>(grid));
        }
    }
    return m;
}

Gate build_bc(int n, bool materialize) {
    if (n < 2 || (materialize && n > 12)) {
        throw std::invalid_argument("basis conversion needs 2 <= n <= 12, got " + std::to_string(n));
    }
    std::vector<Qubit> targets;
    for (int q = 0; q < n; q++) {
        targets.push_back(q);
    }
    std::shared_ptr<const DenseMatrix> matrix;
    if (materialize) {
        matrix = std::make_shared<const DenseMatrix>(sine_transform_matrix(n));
    }
    return Gate::block("BC", std::move(targets), std::move(matrix));
}

Circuit build_inversion_serial(const QpsLayout &layout, RyConstruction ry) {
    Circuit circuit = layout.empty_circuit();
    // Module n-1 covers j = 2^(n-1), whose sequence is all constants.
    for (int m = 0; m < layout.n; m++) {
        if (ry == RyConstruction::kSemantic) {
            append_semantic_module(circuit, layout, m);
        } else {
            append_bitwise_module(circuit, layout, m);
        }
    }
    return circuit;
}

Circuit build_inversion_serial(int n, RyConstruction ry) {
    return build_inversion_serial(QpsLayout::make(n, Mode::kSerial), ry);
}

Circuit build_control_parallelization(const QpsLayout &layout) {
    if (!layout.c) {
        throw std::invalid_argument("control parallelization needs the parallel layout");
    }
    int n = layout.n;
    const auto &c = *layout.c;
    Circuit cp = layout.empty_circuit();
    // Prefix-zero chain: C[m-1] <- (bits 0..m all clear), m = 1..n-2.
    cp.append(Gate::cnot({c.qubit(0)}, {neg(layout.b_bit(0)), neg(layout.b_bit(1))}));
    for (int m = 2; m <= n - 2; m++) {
        cp.append(Gate::cnot({c.qubit(m - 1)}, {pos(c.qubit(m - 2)), neg(layout.b_bit(m))}));
    }
    // Module n-1 selector on Anc while C[n-3] still holds the longest prefix.
    cp.append(Gate::cnot({layout.anc.offset}, {pos(c.qubit(n - 3)), pos(layout.b_bit(n - 1))}));
    // (prefix through m) xor (prefix through m-1) = module m selector.
    for (int m = n - 2; m >= 2; m--) {
        cp.append(Gate::cnot({c.qubit(m - 1)}, {pos(c.qubit(m - 2))}));
    }
    cp.append(Gate::cnot({c.qubit(0)}, {neg(layout.b_bit(0))}));
    return cp;
}

Circuit build_inversion_parallel(const QpsLayout &layout) {
    int n = layout.n;
    if (n < 3 || !layout.c) {
        throw std::invalid_argument("parallel inversion needs n >= 3 and the parallel layout");
    }
    auto selector = [&](int m) -> Qubit {
        if (m == 0) {
            return layout.b_bit(0);
        }
        if (m == n - 1) {
            return layout.anc.offset;
        }
        return layout.c->qubit(m - 1);
    };

    Circuit cp = build_control_parallelization(layout);
    Circuit circuit = cp;

    for (int t = 0; t <= n - 2; t++) {
        circuit.append(Gate::ry(kConstantTermAngle, layout.pair(t), {pos(selector(n - 1))}));
    }

    // Group r holds unit (m, (r + m) mod (n-1)) of every module m. Within a
    // group, step s of module m's unit reads B bit m + s, so units at the same
    // step never share a qubit.
    int pairs = n - 1;
    for (int r = 0; r < pairs; r++) {
        std::vector<std::vector<Gate>> units;
        for (int m = 0; m <= n - 2; m++) {
            int t = (r + m) % pairs;
            if (t < m) {
                units.push_back({Gate::ry(kConstantTermAngle, layout.pair(t), {pos(selector(m))})});
            } else {
                units.push_back(swapped_sine_unit(layout, m, n - t, selector(m)));
            }
        }
        for (std::size_t step = 0;; step++) {
            bool any = false;
            for (auto &unit : units) {
                if (step < unit.size()) {
                    circuit.append(unit[step]);
                    any = true;
                }
            }
            if (!any) {
                break;
            }
        }
    }

    circuit.append(adjoint(cp));
    return circuit;
}

Circuit build_inversion_parallel(int n) {
    return build_inversion_parallel(QpsLayout::make(n, Mode::kParallel));
}

Circuit build_flag(const QpsLayout &layout) {
    Circuit circuit = layout.empty_circuit();
    std::vector<Control> controls;
    for (int q = 0; q < layout.e.width; q++) {
        controls.push_back(pos(layout.e.qubit(q)));
    }
    circuit.append(Gate::cnot({layout.anc.offset}, std::move(controls)));
    return circuit;
}

Circuit build_flag(int n) {
    return build_flag(QpsLayout::make(n, Mode::kSerial));
}

Circuit build_inversion(const QpsConfig &config, const QpsLayout &layout) {
    Circuit inv = config.mode == Mode::kParallel ? build_inversion_parallel(layout)
                                                 : build_inversion_serial(layout, config.ry);
    if (config.inject_fault) {
        perturb_first_rotation(inv);
    }
    return inv;
}

Circuit build_qps(const QpsConfig &config) {
    config.validate();
    auto layout = QpsLayout::make(config.n, config.mode);
    Circuit circuit = layout.empty_circuit();
    Gate bc = build_bc(config.n, config.materialize_blocks);
    circuit.append(bc);
    circuit.append(build_inversion(config, layout));
    circuit.append(build_flag(layout));
    circuit.append(bc.adjoint());
    return circuit;
}

}  // namespace qps
