#include "pimfhe/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pimfhe {

namespace {

const std::set<std::string> kBinaryOps = {"AND", "NAND", "OR", "NOR", "XOR", "XNOR"};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool valid_wire(const std::string& w) {
    if (w.empty()) return false;
    for (char c : w)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

[[noreturn]] void fail(size_t line, const std::string& msg) {
    throw std::invalid_argument("netlist line " + std::to_string(line) + ": " + msg);
}

} // namespace

Circuit parse_netlist(const std::string& text) {
    Circuit c;
    std::set<std::string> defined;
    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        if (line.rfind("INPUT ", 0) == 0) {
            std::string w = trim(line.substr(6));
            if (!valid_wire(w)) fail(lineno, "bad input wire name");
            if (defined.count(w)) fail(lineno, "wire redefined: " + w);
            defined.insert(w);
            c.inputs.push_back(w);
            continue;
        }
        if (line.rfind("OUTPUT ", 0) == 0) {
            std::string w = trim(line.substr(7));
            if (!valid_wire(w)) fail(lineno, "bad output wire name");
            c.outputs.push_back(w);
            continue;
        }

        size_t eq = line.find('=');
        size_t lp = line.find('(');
        size_t rp = line.rfind(')');
        if (eq == std::string::npos || lp == std::string::npos || rp == std::string::npos || lp > rp)
            fail(lineno, "expected `out = OP(in1[, in2])`");
        CircuitGate g;
        g.out = trim(line.substr(0, eq));
        g.op = trim(line.substr(eq + 1, lp - eq - 1));
        std::string args = line.substr(lp + 1, rp - lp - 1);
        size_t comma = args.find(',');
        if (comma == std::string::npos) {
            g.in1 = trim(args);
        } else {
            g.in1 = trim(args.substr(0, comma));
            g.in2 = trim(args.substr(comma + 1));
        }

        if (!valid_wire(g.out)) fail(lineno, "bad output wire name");
        if (defined.count(g.out)) fail(lineno, "wire redefined: " + g.out);
        bool binary = kBinaryOps.count(g.op) > 0;
        if (!binary && g.op != "NOT") fail(lineno, "unknown gate op: " + g.op);
        if (binary && (g.in1.empty() || g.in2.empty())) fail(lineno, g.op + " needs two inputs");
        if (!binary && (g.in1.empty() || !g.in2.empty())) fail(lineno, "NOT needs one input");
        if (!defined.count(g.in1)) fail(lineno, "use of undefined wire: " + g.in1);
        if (binary && !defined.count(g.in2)) fail(lineno, "use of undefined wire: " + g.in2);

        defined.insert(g.out);
        c.gates.push_back(std::move(g));
    }
    for (const auto& w : c.outputs)
        if (!defined.count(w)) throw std::invalid_argument("undefined output wire: " + w);
    analyze(c);
    return c;
}

void analyze(Circuit& c) {
    std::map<std::string, uint32_t> level;
    for (const auto& w : c.inputs) level[w] = 0;
    c.depth = 0;
    c.bootstrap_count = 0;
    std::map<uint32_t, uint64_t> width;
    for (const auto& g : c.gates) {
        uint32_t in = level[g.in1];
        if (!g.in2.empty()) in = std::max(in, level[g.in2]);
        // NOT is a linear rewrite, free in depth and bootstrap count.
        uint32_t lv = g.op == "NOT" ? in : in + 1;
        level[g.out] = lv;
        if (g.op != "NOT") {
            c.bootstrap_count++;
            width[lv]++;
            c.depth = std::max(c.depth, lv);
        }
    }
    c.level_width.assign(c.depth + 1, 0);
    for (auto& [lv, w] : width) c.level_width[lv] = w;
}

std::string to_netlist(const Circuit& c) {
    std::ostringstream os;
    for (const auto& w : c.inputs) os << "INPUT " << w << "\n";
    for (const auto& g : c.gates) {
        os << g.out << " = " << g.op << "(" << g.in1;
        if (!g.in2.empty()) os << ", " << g.in2;
        os << ")\n";
    }
    for (const auto& w : c.outputs) os << "OUTPUT " << w << "\n";
    return os.str();
}

namespace {

// Emits a Kogge-Stone adder over existing wires; returns sum wires then carry.
// Prefix stage nodes combine (g, p) pairs; bootstrap depth is
// 1 (p/g) + 2 per prefix stage + 1 (final sum xor).
std::vector<std::string> emit_kogge_stone(Circuit& c, const std::string& prefix,
                                          const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
    const size_t w = a.size();
    auto gate = [&](const std::string& op, const std::string& out, const std::string& i1,
                    const std::string& i2) {
        c.gates.push_back(CircuitGate{op, out, i1, i2});
    };
    std::vector<std::string> p(w), g(w);
    for (size_t i = 0; i < w; ++i) {
        p[i] = prefix + "p0_" + std::to_string(i);
        g[i] = prefix + "g0_" + std::to_string(i);
        gate("XOR", p[i], a[i], b[i]);
        gate("AND", g[i], a[i], b[i]);
    }
    std::vector<std::string> propagate = p;
    uint32_t stage = 1;
    for (size_t d = 1; d < w; d *= 2, ++stage) {
        std::vector<std::string> g2 = g, p2 = propagate;
        for (size_t i = d; i < w; ++i) {
            std::string t = prefix + "t" + std::to_string(stage) + "_" + std::to_string(i);
            std::string gn = prefix + "g" + std::to_string(stage) + "_" + std::to_string(i);
            gate("AND", t, propagate[i], g[i - d]);
            gate("OR", gn, g[i], t);
            g2[i] = gn;
            if (2 * d < w) { // the last stage's propagate terms are never read
                std::string pn = prefix + "pp" + std::to_string(stage) + "_" + std::to_string(i);
                gate("AND", pn, propagate[i], propagate[i - d]);
                p2[i] = pn;
            }
        }
        g = std::move(g2);
        propagate = std::move(p2);
    }
    std::vector<std::string> out(w + 1);
    out[0] = p[0];
    for (size_t i = 1; i < w; ++i) {
        out[i] = prefix + "s_" + std::to_string(i);
        gate("XOR", out[i], p[i], g[i - 1]);
    }
    out[w] = g[w - 1];
    return out;
}

// Renames one wire everywhere it appears. Builders use this to give output
// wires stable public names (s0.., cout, p0..) without adding pass-through
// gates that would distort gate counts and depth.
void rename_wire(Circuit& c, const std::string& from, const std::string& to) {
    if (from == to) return;
    for (auto& w : c.inputs)
        if (w == from) w = to;
    for (auto& g : c.gates) {
        if (g.out == from) g.out = to;
        if (g.in1 == from) g.in1 = to;
        if (g.in2 == from) g.in2 = to;
    }
    for (auto& w : c.outputs)
        if (w == from) w = to;
}

} // namespace

Circuit build_kogge_stone_adder(uint32_t width) {
    if (width == 0) throw std::invalid_argument("adder width must be positive");
    Circuit c;
    std::vector<std::string> a(width), b(width);
    for (uint32_t i = 0; i < width; ++i) {
        a[i] = "a" + std::to_string(i);
        b[i] = "b" + std::to_string(i);
        c.inputs.push_back(a[i]);
    }
    for (uint32_t i = 0; i < width; ++i) c.inputs.push_back(b[i]);
    // Outputs in order: sum bits LSB first, then the carry, published as
    // s0..s{width-1} and cout.
    c.outputs = emit_kogge_stone(c, "ks_", a, b);
    for (uint32_t i = 0; i < width; ++i) rename_wire(c, c.outputs[i], "s" + std::to_string(i));
    rename_wire(c, c.outputs[width], "cout");
    analyze(c);
    return c;
}

Circuit build_multiplier(uint32_t width) {
    if (width == 0) throw std::invalid_argument("multiplier width must be positive");
    Circuit c;
    std::vector<std::string> a(width), b(width);
    for (uint32_t i = 0; i < width; ++i) {
        a[i] = "a" + std::to_string(i);
        c.inputs.push_back(a[i]);
    }
    for (uint32_t i = 0; i < width; ++i) {
        b[i] = "b" + std::to_string(i);
        c.inputs.push_back(b[i]);
    }
    auto gate = [&](const std::string& op, const std::string& out, const std::string& i1,
                    const std::string& i2) {
        c.gates.push_back(CircuitGate{op, out, i1, i2});
    };
    // A shared encrypted zero pads the shifted rows to full product width.
    std::string zero = "mz";
    gate("XOR", zero, a[0], a[0]);

    const uint32_t pw = 2 * width;
    std::vector<std::vector<std::string>> rows(width, std::vector<std::string>(pw, zero));
    for (uint32_t i = 0; i < width; ++i)
        for (uint32_t j = 0; j < width; ++j) {
            std::string w = "pp" + std::to_string(i) + "_" + std::to_string(j);
            gate("AND", w, a[j], b[i]);
            rows[i][i + j] = w;
        }
    // Pairwise adder tree; carries out of 2w bits cannot occur for w*w products.
    uint32_t label = 0;
    while (rows.size() > 1) {
        std::vector<std::vector<std::string>> next;
        for (size_t i = 0; i + 1 < rows.size(); i += 2) {
            std::string prefix = "add" + std::to_string(label++) + "_";
            std::vector<std::string> s = emit_kogge_stone(c, prefix, rows[i], rows[i + 1]);
            s.pop_back();
            next.push_back(std::move(s));
        }
        if (rows.size() % 2) next.push_back(std::move(rows.back()));
        rows = std::move(next);
    }
    // Product bits LSB first, published as p0..p{2*width-1}.
    for (uint32_t i = 0; i < pw; ++i) c.outputs.push_back(rows[0][i]);
    for (uint32_t i = 0; i < pw; ++i) rename_wire(c, c.outputs[i], "p" + std::to_string(i));
    analyze(c);
    return c;
}

std::map<std::string, LweCiphertext> eval_circuit(const EvalContext& ctx, const Circuit& c,
                                                  const std::map<std::string, LweCiphertext>& values,
                                                  uint32_t parallelism) {
    if (parallelism == 0) throw std::invalid_argument("parallelism must be positive");
    std::map<std::string, LweCiphertext> wires = values;
    for (const auto& w : c.inputs)
        if (!wires.count(w)) throw std::invalid_argument("missing input ciphertext: " + w);

    auto run = [&](const CircuitGate& g) {
        if (g.op == "NOT")
            wires[g.out] = eval_not(*ctx.params, wires.at(g.in1));
        else
            wires[g.out] = eval_gate(ctx, gate_spec(g.op), wires.at(g.in1), wires.at(g.in2));
    };

    // Waves of ready gates: inputs of every wave member are already computed,
    // so members are mutually independent and the walk order cannot matter.
    std::vector<size_t> pending(c.gates.size());
    for (size_t i = 0; i < pending.size(); ++i) pending[i] = i;
    while (!pending.empty()) {
        std::vector<size_t> wave, rest;
        for (size_t idx : pending) {
            const CircuitGate& g = c.gates[idx];
            bool ready = wires.count(g.in1) && (g.in2.empty() || wires.count(g.in2));
            (ready ? wave : rest).push_back(idx);
        }
        if (wave.empty()) throw std::invalid_argument("circuit is not executable in order");
        // Stripe the wave by the declared width: lane l takes indices l, l+k, ...
        for (uint32_t lane = 0; lane < parallelism; ++lane)
            for (size_t i = lane; i < wave.size(); i += parallelism) run(c.gates[wave[i]]);
        pending = std::move(rest);
    }

    std::map<std::string, LweCiphertext> out;
    for (const auto& w : c.outputs) out[w] = wires.at(w);
    return out;
}

std::map<std::string, uint32_t> eval_circuit_plain(const Circuit& c,
                                                   const std::map<std::string, uint32_t>& values) {
    std::map<std::string, uint32_t> wires = values;
    for (const auto& g : c.gates) {
        uint32_t x = wires.at(g.in1) & 1;
        uint32_t y = g.in2.empty() ? 0 : wires.at(g.in2) & 1;
        uint32_t r = 0;
        if (g.op == "AND") r = x & y;
        else if (g.op == "NAND") r = 1 - (x & y);
        else if (g.op == "OR") r = x | y;
        else if (g.op == "NOR") r = 1 - (x | y);
        else if (g.op == "XOR") r = x ^ y;
        else if (g.op == "XNOR") r = 1 - (x ^ y);
        else if (g.op == "NOT") r = 1 - x;
        else throw std::invalid_argument("unknown gate op: " + g.op);
        wires[g.out] = r;
    }
    std::map<std::string, uint32_t> out;
    for (const auto& w : c.outputs) out[w] = wires.at(w);
    return out;
}

} // namespace pimfhe
