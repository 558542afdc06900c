#include "mulsim/netlist_build.hpp"

#include <fmt/format.h>

#include <map>
#include <stdexcept>

namespace mulsim {

NetBuilder::NetBuilder(std::string name) { nl_.name = std::move(name); }

NetId NetBuilder::new_net() {
  const NetId n = nl_.net_count++;
  inv_of_.push_back(kNoNet);
  return n;
}

NetId NetBuilder::c0() {
  if (const0_ == kNoNet) {
    const0_ = new_net();
    nl_.const0 = const0_;
  }
  return const0_;
}

NetId NetBuilder::c1() {
  if (const1_ == kNoNet) {
    const1_ = new_net();
    nl_.const1 = const1_;
  }
  return const1_;
}

bool NetBuilder::is_const(NetId n) const {
  return (n == const0_ && const0_ != kNoNet) ||
         (n == const1_ && const1_ != kNoNet);
}

Bus NetBuilder::add_input(const std::string& name, std::size_t width) {
  Port p{name, {}};
  p.bits.reserve(width);
  for (std::size_t i = 0; i < width; ++i) p.bits.push_back(new_net());
  nl_.inputs.push_back(p);
  return nl_.inputs.back().bits;
}

void NetBuilder::add_output(const std::string& name, const Bus& bits) {
  nl_.outputs.push_back(Port{name, bits});
}

std::uint32_t NetBuilder::emit(GateKind kind,
                               std::initializer_list<NetId> ins,
                               unsigned num_outs) {
  Gate g;
  g.kind = kind;
  unsigned i = 0;
  for (NetId n : ins) g.in[i++] = n;
  for (unsigned o = 0; o < num_outs; ++o) g.out[o] = new_net();
  nl_.gates.push_back(g);
  return static_cast<std::uint32_t>(nl_.gates.size() - 1);
}

NetId NetBuilder::inv(NetId a) {
  if (a == const0_ && const0_ != kNoNet) return c1();
  if (a == const1_ && const1_ != kNoNet) return c0();
  if (inv_of_[a] != kNoNet) return inv_of_[a];
  const std::uint32_t g = emit(GateKind::Inv, {a}, 1);
  const NetId y = nl_.gates[g].out[0];
  inv_of_[a] = y;
  inv_of_[y] = a;
  return y;
}

NetId NetBuilder::and2(NetId a, NetId b) {
  if (a == const0_ || b == const0_) return c0();
  if (a == const1_ && const1_ != kNoNet) return b;
  if (b == const1_ && const1_ != kNoNet) return a;
  if (a == b) return a;
  return nl_.gates[emit(GateKind::And2, {a, b}, 1)].out[0];
}

NetId NetBuilder::or2(NetId a, NetId b) {
  if (a == const1_ || b == const1_) return c1();
  if (a == const0_ && const0_ != kNoNet) return b;
  if (b == const0_ && const0_ != kNoNet) return a;
  if (a == b) return a;
  return nl_.gates[emit(GateKind::Or2, {a, b}, 1)].out[0];
}

NetId NetBuilder::xor2(NetId a, NetId b) {
  if (a == const0_ && const0_ != kNoNet) return b;
  if (b == const0_ && const0_ != kNoNet) return a;
  if (a == const1_ && const1_ != kNoNet) return inv(b);
  if (b == const1_ && const1_ != kNoNet) return inv(a);
  if (a == b) return c0();
  return nl_.gates[emit(GateKind::Xor2, {a, b}, 1)].out[0];
}

NetId NetBuilder::nand2(NetId a, NetId b) {
  if (a == const0_ || b == const0_) return c1();
  if (a == const1_ && const1_ != kNoNet) return inv(b);
  if (b == const1_ && const1_ != kNoNet) return inv(a);
  if (a == b) return inv(a);
  return nl_.gates[emit(GateKind::Nand2, {a, b}, 1)].out[0];
}

NetId NetBuilder::nor2(NetId a, NetId b) {
  if (a == const1_ || b == const1_) return c0();
  if (a == const0_ && const0_ != kNoNet) return inv(b);
  if (b == const0_ && const0_ != kNoNet) return inv(a);
  if (a == b) return inv(a);
  return nl_.gates[emit(GateKind::Nor2, {a, b}, 1)].out[0];
}

NetId NetBuilder::mux2(NetId d0, NetId d1, NetId sel) {
  if (sel == const0_ && const0_ != kNoNet) return d0;
  if (sel == const1_ && const1_ != kNoNet) return d1;
  if (d0 == d1) return d0;
  const bool d0c0 = (d0 == const0_ && const0_ != kNoNet);
  const bool d0c1 = (d0 == const1_ && const1_ != kNoNet);
  const bool d1c0 = (d1 == const0_ && const0_ != kNoNet);
  const bool d1c1 = (d1 == const1_ && const1_ != kNoNet);
  if (d0c0 && d1c1) return sel;
  if (d0c1 && d1c0) return inv(sel);
  if (d1c0) return and2(d0, inv(sel));
  if (d1c1) return or2(d0, sel);
  if (d0c0) return and2(d1, sel);
  if (d0c1) return or2(d1, inv(sel));
  return nl_.gates[emit(GateKind::Mux2, {d0, d1, sel}, 1)].out[0];
}

std::pair<NetId, NetId> NetBuilder::half_adder(NetId a, NetId b) {
  if (a == const0_ && const0_ != kNoNet) return {b, c0()};
  if (b == const0_ && const0_ != kNoNet) return {a, c0()};
  if (a == const1_ && const1_ != kNoNet) return {inv(b), b};
  if (b == const1_ && const1_ != kNoNet) return {inv(a), a};
  if (a == b) return {c0(), a};
  const std::uint32_t g = emit(GateKind::HalfAdder, {a, b}, 2);
  return {nl_.gates[g].out[0], nl_.gates[g].out[1]};
}

std::pair<NetId, NetId> NetBuilder::full_adder(NetId a, NetId b, NetId c) {
  if (c == const0_ && const0_ != kNoNet) return half_adder(a, b);
  if (b == const0_ && const0_ != kNoNet) return half_adder(a, c);
  if (a == const0_ && const0_ != kNoNet) return half_adder(b, c);
  if (c == const1_ && const1_ != kNoNet)
    return {inv(xor2(a, b)), or2(a, b)};
  if (b == const1_ && const1_ != kNoNet)
    return {inv(xor2(a, c)), or2(a, c)};
  if (a == const1_ && const1_ != kNoNet)
    return {inv(xor2(b, c)), or2(b, c)};
  if (a == b) return {c, a};  // a+a+c = 2a+c
  if (a == c) return {b, a};
  if (b == c) return {a, b};
  const std::uint32_t g = emit(GateKind::FullAdder, {a, b, c}, 2);
  return {nl_.gates[g].out[0], nl_.gates[g].out[1]};
}

NetId NetBuilder::dff(NetId d) {
  return nl_.gates[emit(GateKind::Dff, {d}, 1)].out[0];
}

NetId NetBuilder::dff(NetId d, RegBank& bank) {
  const std::uint32_t g = emit(GateKind::Dff, {d}, 1);
  bank.dffs.push_back(g);
  return nl_.gates[g].out[0];
}

NetBuilder::OpenDff NetBuilder::dff_open(RegBank& bank) {
  const std::uint32_t g = emit(GateKind::Dff, {kNoNet}, 1);
  bank.dffs.push_back(g);
  return OpenDff{g, nl_.gates[g].out[0]};
}

void NetBuilder::dff_bind(const OpenDff& d, NetId data) {
  nl_.gates[d.gate].in[0] = data;
}

std::vector<NetBuilder::OpenDff> NetBuilder::dff_open_bus(std::size_t width,
                                                          RegBank& bank) {
  std::vector<OpenDff> v;
  v.reserve(width);
  for (std::size_t i = 0; i < width; ++i) v.push_back(dff_open(bank));
  return v;
}

Bus NetBuilder::bus_of(const std::vector<OpenDff>& dffs) const {
  Bus b;
  b.reserve(dffs.size());
  for (const OpenDff& d : dffs) b.push_back(d.q);
  return b;
}

void NetBuilder::dff_bind_bus(const std::vector<OpenDff>& dffs,
                              const Bus& data) {
  for (std::size_t i = 0; i < dffs.size(); ++i)
    dff_bind(dffs[i], i < data.size() ? data[i] : const0_);
}

RegBank& NetBuilder::add_reg_bank(const std::string& name) {
  nl_.reg_banks.push_back(RegBank{name, {}});
  return nl_.reg_banks.back();
}

void NetBuilder::note_block(const std::string& name, std::uint32_t count) {
  for (auto& [block, c] : nl_.blocks) {
    if (block == name) {
      c += count;
      return;
    }
  }
  nl_.blocks.emplace_back(name, count);
}

NetId NetBuilder::bit(const Bus& bus, std::size_t i) const {
  if (i < bus.size()) return bus[i];
  return const0_;  // caller must have materialized c0 first
}

Bus NetBuilder::bus_and_bit(const Bus& bus, NetId en) {
  Bus out(bus.size());
  for (std::size_t i = 0; i < bus.size(); ++i) out[i] = and2(bus[i], en);
  return out;
}

Bus NetBuilder::bus_mux(const Bus& d0, const Bus& d1, NetId sel) {
  const std::size_t w = std::max(d0.size(), d1.size());
  c0();
  Bus out(w);
  for (std::size_t i = 0; i < w; ++i)
    out[i] = mux2(bit(d0, i), bit(d1, i), sel);
  return out;
}

Bus NetBuilder::bus_shl(const Bus& bus, std::size_t amount) {
  Bus out(bus.size() + amount, c0());
  for (std::size_t i = 0; i < bus.size(); ++i) out[i + amount] = bus[i];
  return out;
}

Bus NetBuilder::adder(const Bus& x, const Bus& y, std::size_t out_width,
                      NetId carry_in) {
  c0();
  Bus sum(out_width);
  NetId carry = (carry_in == kNoNet) ? c0() : carry_in;
  for (std::size_t i = 0; i < out_width; ++i) {
    auto [s, c] = full_adder(bit(x, i), bit(y, i), carry);
    sum[i] = s;
    carry = c;
  }
  return sum;
}

NetId NetBuilder::or_tree(std::vector<NetId> terms) {
  if (terms.empty()) return c0();
  while (terms.size() > 1) {
    std::vector<NetId> next;
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2)
      next.push_back(or2(terms[i], terms[i + 1]));
    if (terms.size() % 2) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms[0];
}

NetId NetBuilder::onehot_select_bit(const std::vector<NetId>& options,
                                    const Bus& onehot) {
  std::vector<NetId> terms;
  terms.reserve(options.size());
  for (std::size_t k = 0; k < options.size(); ++k)
    terms.push_back(and2(onehot[k], options[k]));
  return or_tree(std::move(terms));
}

Bus NetBuilder::onehot_select(const std::vector<Bus>& options,
                              const Bus& onehot, std::size_t out_width) {
  c0();
  Bus out(out_width);
  for (std::size_t j = 0; j < out_width; ++j) {
    std::vector<NetId> opts;
    opts.reserve(options.size());
    for (const Bus& o : options) opts.push_back(bit(o, j));
    out[j] = onehot_select_bit(opts, onehot);
  }
  return out;
}

namespace {

// One-hot ring counter. Slot 0 stores its complement so the
// reset-to-zero state decodes as "slot 0 hot"; the ring rotates when
// `advance` is high and holds otherwise.
struct OneHotRing {
  Bus state;
};

OneHotRing make_ring(NetBuilder& b, std::size_t size, RegBank& bank,
                     std::vector<NetBuilder::OpenDff>& flops_out) {
  OneHotRing ring;
  flops_out = b.dff_open_bus(size, bank);
  ring.state.resize(size);
  ring.state[0] = b.inv(flops_out[0].q);
  for (std::size_t k = 1; k < size; ++k) ring.state[k] = flops_out[k].q;
  return ring;
}

void bind_ring(NetBuilder& b, OneHotRing& ring,
               std::vector<NetBuilder::OpenDff>& flops, NetId advance) {
  const std::size_t size = ring.state.size();
  for (std::size_t k = 0; k < size; ++k) {
    const NetId prev = ring.state[(k + size - 1) % size];
    const NetId next = b.mux2(ring.state[k], prev, advance);
    b.dff_bind(flops[k], k == 0 ? b.inv(next) : next);
  }
}

// Latch that goes high the cycle after `trigger` and stays high.
NetId make_done(NetBuilder& b, NetId trigger, RegBank& bank) {
  auto flop = b.dff_open(bank);
  b.dff_bind(flop, b.or2(flop.q, trigger));
  return flop.q;
}

Netlist build_wallace(std::size_t n) {
  NetBuilder b(fmt::format("wallace_n{}", n));
  std::vector<Bus> a(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = b.add_input(fmt::format("a{}", i), 8);
  const Bus bb = b.add_input("b", 8);
  b.c0();

  for (std::size_t i = 0; i < n; ++i) {
    // Partial-product matrix: row k = (a & b[k]) << k.
    std::vector<Bus> rows;
    rows.reserve(8);
    for (std::size_t k = 0; k < 8; ++k) {
      Bus row(16, b.c0());
      for (std::size_t j = 0; j < 8; ++j)
        row[k + j] = b.and2(a[i][j], bb[k]);
      rows.push_back(std::move(row));
    }
    // Carry-save stages, three rows to two, leftovers pass through
    // (row counts 8 -> 6 -> 4 -> 3 -> 2).
    while (rows.size() > 2) {
      std::vector<Bus> next;
      std::size_t k = 0;
      for (; k + 3 <= rows.size(); k += 3) {
        Bus sum(16, b.c0());
        Bus carry(16, b.c0());
        for (std::size_t col = 0; col < 16; ++col) {
          auto [s, c] = b.full_adder(rows[k][col], rows[k + 1][col],
                                     rows[k + 2][col]);
          sum[col] = s;
          if (col + 1 < 16) carry[col + 1] = c;
        }
        next.push_back(std::move(sum));
        next.push_back(std::move(carry));
      }
      for (; k < rows.size(); ++k) next.push_back(std::move(rows[k]));
      rows = std::move(next);
    }
    const Bus product = b.adder(rows[0], rows[1], 16);
    b.add_output(fmt::format("p{}", i), product);
    b.note_block("wallace_block");
  }
  return b.take();
}

Netlist build_shift_add(std::size_t n) {
  NetBuilder b(fmt::format("shift_add_n{}", n));
  std::vector<Bus> a(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = b.add_input(fmt::format("a{}", i), 8);
  const Bus bb = b.add_input("b", 8);
  b.c0();

  for (std::size_t i = 0; i < n; ++i) {
    RegBank& ctrl = b.add_reg_bank(fmt::format("ctrl{}", i));
    std::vector<NetBuilder::OpenDff> ring_flops;
    OneHotRing ring = make_ring(b, 8, ctrl, ring_flops);
    const NetId done = make_done(b, ring.state[7], ctrl);
    bind_ring(b, ring, ring_flops, b.inv(done));

    RegBank& qbank = b.add_reg_bank(fmt::format("q{}", i));
    RegBank& abank = b.add_reg_bank(fmt::format("ahi{}", i));
    auto q_flops = b.dff_open_bus(8, qbank);
    auto ahi_flops = b.dff_open_bus(8, abank);
    const Bus q = b.bus_of(q_flops);
    const Bus ahi = b.bus_of(ahi_flops);

    // First cycle reads the multiplier straight from b; afterwards the
    // shifted copy lives in q.
    const Bus q_eff = b.bus_mux(q, bb, ring.state[0]);
    const Bus addend = b.bus_and_bit(a[i], q_eff[0]);
    const Bus sum9 = b.adder(ahi, addend, 9);

    Bus ahi_next(8), q_next(8);
    for (std::size_t j = 0; j < 8; ++j) ahi_next[j] = sum9[j + 1];
    for (std::size_t j = 0; j < 7; ++j) q_next[j] = q_eff[j + 1];
    q_next[7] = sum9[0];

    b.dff_bind_bus(ahi_flops, b.bus_mux(ahi_next, ahi, done));
    b.dff_bind_bus(q_flops, b.bus_mux(q_next, q, done));

    Bus product = q;
    product.insert(product.end(), ahi.begin(), ahi.end());
    b.add_output(fmt::format("p{}", i), product);
    b.note_block("shift_add_lane");
  }
  return b.take();
}

Netlist build_booth(std::size_t n) {
  NetBuilder b(fmt::format("booth_n{}", n));
  std::vector<Bus> a(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = b.add_input(fmt::format("a{}", i), 8);
  const Bus bb = b.add_input("b", 8);
  b.c0();

  // Radix-4 digit decode of the broadcast multiplier, shared by all
  // lanes: per step, sign / magnitude-one / magnitude-two.
  std::vector<NetId> neg(4), one(4), two(4);
  for (std::size_t k = 0; k < 4; ++k) {
    const NetId bm1 = (k == 0) ? b.c0() : bb[2 * k - 1];
    const NetId b0 = bb[2 * k];
    const NetId b1 = bb[2 * k + 1];
    neg[k] = b1;
    one[k] = b.xor2(b0, bm1);
    two[k] = b.or2(b.and2(b1, b.nor2(b0, bm1)),
                   b.and2(b.inv(b1), b.and2(b0, bm1)));
  }
  b.note_block("booth_decode");

  for (std::size_t i = 0; i < n; ++i) {
    RegBank& ctrl = b.add_reg_bank(fmt::format("ctrl{}", i));
    std::vector<NetBuilder::OpenDff> ring_flops;
    OneHotRing ring = make_ring(b, 4, ctrl, ring_flops);
    const NetId done = make_done(b, ring.state[3], ctrl);
    bind_ring(b, ring, ring_flops, b.inv(done));

    const NetId neg_s = b.onehot_select_bit(neg, ring.state);
    const NetId one_s = b.onehot_select_bit(one, ring.state);
    const NetId two_s = b.onehot_select_bit(two, ring.state);

    // Digit magnitude 0/a/2a, then alignment by the step's 2k shift.
    Bus mag(9);
    for (std::size_t j = 0; j < 9; ++j) {
      const NetId base = (j < 8) ? b.and2(a[i][j], one_s) : b.c0();
      const NetId shifted = (j >= 1) ? a[i][j - 1] : b.c0();
      mag[j] = b.mux2(base, shifted, two_s);
    }
    std::vector<Bus> aligned_opts{mag, b.bus_shl(mag, 2), b.bus_shl(mag, 4),
                                  b.bus_shl(mag, 6)};
    const Bus aligned = b.onehot_select(aligned_opts, ring.state, 15);

    // Two's-complement addend: conditional invert plus carry-in.
    Bus addend(18);
    for (std::size_t j = 0; j < 18; ++j)
      addend[j] = (j < 15) ? b.xor2(aligned[j], neg_s) : neg_s;

    RegBank& accbank = b.add_reg_bank(fmt::format("acc{}", i));
    auto acc_flops = b.dff_open_bus(18, accbank);
    const Bus acc = b.bus_of(acc_flops);
    const Bus sum = b.adder(acc, addend, 18, neg_s);
    b.dff_bind_bus(acc_flops, b.bus_mux(sum, acc, done));

    // Unsigned correction (+a<<8 when b[7]) applied combinationally on
    // the way out; valid once the lane is done.
    const Bus corr = b.bus_and_bit(a[i], bb[7]);
    Bus acc_hi(acc.begin() + 8, acc.begin() + 16);
    const Bus out_hi = b.adder(acc_hi, corr, 8);
    Bus product(acc.begin(), acc.begin() + 8);
    product.insert(product.end(), out_hi.begin(), out_hi.end());
    b.add_output(fmt::format("p{}", i), product);
    b.note_block("booth_lane");
  }
  return b.take();
}

// Precompute logic: gated shifted copies of `a` summed pairwise.
Bus build_pl(NetBuilder& b, const Bus& a, const Bus& nib) {
  std::vector<Bus> terms(4);
  for (std::size_t t = 0; t < 4; ++t)
    terms[t] = b.bus_shl(b.bus_and_bit(a, nib[t]), t);
  const Bus t01 = b.adder(terms[0], terms[1], 10);
  const Bus t23 = b.adder(terms[2], terms[3], 12);
  return b.adder(t01, t23, 12);
}

Netlist build_nibble(std::size_t n, const NibbleMode& mode) {
  if (mode.lanes == 0 || mode.lanes > n)
    throw std::invalid_argument("nibble netlist: lanes must be in 1..n");
  const bool sequential = (mode.kind == NibbleModeKind::Sequential);
  const bool comb = !sequential && mode.lanes == n;

  NetBuilder b(fmt::format("nibble_{}_n{}_l{}",
                           sequential ? "seq" : "unrolled", n, mode.lanes));
  std::vector<Bus> a(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = b.add_input(fmt::format("a{}", i), 8);
  const Bus bb = b.add_input("b", 8);
  b.c0();

  const Bus b_lo(bb.begin(), bb.begin() + 4);
  const Bus b_hi(bb.begin() + 4, bb.end());

  if (comb) {
    // Fully unrolled: both nibbles evaluated in the same cycle, one
    // datapath per element, no state.
    for (std::size_t i = 0; i < n; ++i) {
      const Bus p0 = build_pl(b, a[i], b_lo);
      const Bus p1 = build_pl(b, a[i], b_hi);
      const Bus product = b.adder(p0, b.bus_shl(p1, 4), 16);
      b.add_output(fmt::format("p{}", i), product);
      b.note_block("nibble_lane");
    }
    return b.take();
  }

  const std::size_t chunk = (n + mode.lanes - 1) / mode.lanes;
  std::vector<Bus> products(n);

  for (std::size_t lane = 0, lo = 0; lo < n; ++lane, lo += chunk) {
    const std::size_t hi = std::min(lo + chunk, n);
    const std::size_t elems = hi - lo;

    RegBank& ctrl = b.add_reg_bank(fmt::format("ctrl{}", lane));
    std::vector<NetBuilder::OpenDff> ring_flops;
    OneHotRing ring = make_ring(b, elems, ctrl, ring_flops);

    NetId nib = b.c0();
    NetBuilder::OpenDff nib_flop{};
    if (sequential) {
      nib_flop = b.dff_open(ctrl);
      nib = nib_flop.q;
    }

    const NetId elem_finish = sequential ? b.and2(ring.state[elems - 1], nib)
                                         : ring.state[elems - 1];
    const NetId done = make_done(b, elem_finish, ctrl);
    const NetId run = b.inv(done);

    if (sequential) {
      b.dff_bind(nib_flop, b.and2(b.inv(nib), run));
      bind_ring(b, ring, ring_flops, b.and2(nib, run));
    } else {
      bind_ring(b, ring, ring_flops, run);
    }

    std::vector<Bus> lane_inputs(a.begin() + lo, a.begin() + hi);
    const Bus a_sel = b.onehot_select(lane_inputs, ring.state, 8);

    Bus result16;
    if (sequential) {
      // One nibble per cycle. The low-nibble cycle parks the PL partial
      // in the accumulator; the high-nibble cycle adds its own partial
      // four positions up through a narrow 12-bit adder and forwards
      // the completed product to the output register. The accumulator
      // bank keeps the architectural 16-bit width; its top four bits
      // are zero by construction.
      const Bus bn = b.bus_mux(b_lo, b_hi, nib);
      const Bus partial = build_pl(b, a_sel, bn);
      RegBank& accbank = b.add_reg_bank(fmt::format("acc{}", lane));
      auto acc_flops = b.dff_open_bus(16, accbank);
      const Bus acc = b.bus_of(acc_flops);

      const NetId load = b.and2(run, b.inv(nib));
      Bus acc_d(16, b.c0());
      for (std::size_t j = 0; j < 12; ++j)
        acc_d[j] = b.mux2(acc[j], partial[j], load);
      b.dff_bind_bus(acc_flops, acc_d);

      const Bus acc_mid(acc.begin() + 4, acc.begin() + 12);
      const Bus sum12 = b.adder(acc_mid, partial, 12);
      result16.assign(acc.begin(), acc.begin() + 4);
      result16.insert(result16.end(), sum12.begin(), sum12.end());
    } else {
      const Bus p0 = build_pl(b, a_sel, b_lo);
      const Bus p1 = build_pl(b, a_sel, b_hi);
      result16 = b.adder(p0, b.bus_shl(p1, 4), 16);
    }

    for (std::size_t k = 0; k < elems; ++k) {
      const NetId we = sequential
                           ? b.and2(b.and2(ring.state[k], nib), run)
                           : b.and2(ring.state[k], run);
      RegBank& outbank = b.add_reg_bank(fmt::format("out{}", lo + k));
      auto out_flops = b.dff_open_bus(16, outbank);
      const Bus outq = b.bus_of(out_flops);
      b.dff_bind_bus(out_flops, b.bus_mux(outq, result16, we));
      products[lo + k] = outq;
    }
    b.note_block("nibble_lane");
  }

  for (std::size_t i = 0; i < n; ++i)
    b.add_output(fmt::format("p{}", i), products[i]);
  return b.take();
}

// Truth-table cone over 4 select bits, Shannon-expanded into MUX2 with
// constant leaves folded away.
class ConeBuilder {
 public:
  ConeBuilder(NetBuilder& b, const Bus& sel) : b_(b), sel_(sel) {}

  NetId build(std::uint16_t table) { return expand(table, 16, 0); }

 private:
  NetId expand(std::uint16_t table, unsigned size, unsigned base) {
    const unsigned level = level_of(size);
    const std::uint16_t mask =
        static_cast<std::uint16_t>(((1u << size) - 1u) << base);
    const std::uint16_t sub = static_cast<std::uint16_t>(table & mask);
    if (sub == 0) return b_.c0();
    if (sub == mask) return b_.c1();
    const auto key = std::make_pair(level, static_cast<std::uint16_t>(sub >> base));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const NetId lo = expand(table, size / 2, base);
    const NetId hi = expand(table, size / 2, base + size / 2);
    const NetId out = b_.mux2(lo, hi, sel_[level]);
    memo_.emplace(key, out);
    return out;
  }

  static unsigned level_of(unsigned size) {
    unsigned l = 0;
    while ((2u << l) < size) ++l;
    return l;  // size 16 -> sel[3] at top, size 2 -> sel[0]
  }

  NetBuilder& b_;
  Bus sel_;
  std::map<std::pair<unsigned, std::uint16_t>, NetId> memo_;
};

// All 120 bits of the result string selected by a B nibble: bit
// 8*(a-1)+k holds bit k of a*b for every nibble value b.
Bus build_res_string_cones(NetBuilder& b, const Bus& sel) {
  Bus bits(120);
  ConeBuilder cones(b, sel);
  for (unsigned pos = 0; pos < 120; ++pos) {
    const unsigned slice_a = pos / 8 + 1;
    const unsigned bit_k = pos % 8;
    std::uint16_t table = 0;
    for (unsigned v = 0; v < 16; ++v)
      if ((slice_a * v >> bit_k) & 1) table |= 1u << v;
    bits[pos] = cones.build(table);
  }
  return bits;
}

// Four-operand composition of the extracted slices: fixed shifts and
// left-to-right accumulation.
Bus compose_lm_output(NetBuilder& b, const Bus& p0, const Bus& p2,
                      const Bus& p1, const Bus& p3) {
  Bus t = b.adder(p0, b.bus_shl(p2, 4), 16);
  t = b.adder(t, b.bus_shl(p1, 4), 16);
  return b.adder(t, b.bus_shl(p3, 8), 16);
}

// 16-way slice selection (entry 0 is constant zero) as a MUX2 tree.
Bus build_slice_mux(NetBuilder& b, const Bus& rs_bits, const Bus& nib) {
  Bus out(8);
  for (unsigned k = 0; k < 8; ++k) {
    std::vector<NetId> entries(16);
    entries[0] = b.c0();
    for (unsigned v = 1; v < 16; ++v) entries[v] = rs_bits[8 * (v - 1) + k];
    // Reduce pairwise on nib[0], then nib[1], ...
    std::vector<NetId> level = std::move(entries);
    unsigned s = 0;
    while (level.size() > 1) {
      std::vector<NetId> next;
      for (std::size_t i = 0; i < level.size(); i += 2)
        next.push_back(b.mux2(level[i], level[i + 1], nib[s]));
      level = std::move(next);
      ++s;
    }
    out[k] = level[0];
  }
  return out;
}

Netlist build_lut_array(std::size_t n) {
  NetBuilder b(fmt::format("lut_array_n{}", n));
  std::vector<Bus> a(n);
  for (std::size_t i = 0; i < n; ++i)
    a[i] = b.add_input(fmt::format("a{}", i), 8);
  const Bus bb = b.add_input("b", 8);
  b.c0();

  const Bus b_lo(bb.begin(), bb.begin() + 4);
  const Bus b_hi(bb.begin() + 4, bb.end());

  // The two result strings are materialized once and shared by every
  // LM block.
  const Bus rs0 = build_res_string_cones(b, b_lo);
  const Bus rs1 = build_res_string_cones(b, b_hi);
  b.note_block("res_string_cone", 2);

  const std::size_t lms = (n + 1) / 2;
  for (std::size_t m = 0; m < lms; ++m) {
    const Bus& lo_elem = a[2 * m];
    const bool has_hi = (2 * m + 1 < n);

    const Bus a0(lo_elem.begin(), lo_elem.begin() + 4);
    const Bus a1(lo_elem.begin() + 4, lo_elem.end());

    const Bus p0o1 = build_slice_mux(b, rs0, a0);
    const Bus p2o1 = build_slice_mux(b, rs1, a0);
    const Bus p1o1 = build_slice_mux(b, rs0, a1);
    const Bus p3o1 = build_slice_mux(b, rs1, a1);
    b.add_output(fmt::format("p{}", 2 * m),
                 compose_lm_output(b, p0o1, p2o1, p1o1, p3o1));

    if (has_hi) {
      const Bus& hi_elem = a[2 * m + 1];
      const Bus a2(hi_elem.begin(), hi_elem.begin() + 4);
      const Bus a3(hi_elem.begin() + 4, hi_elem.end());
      const Bus p0o2 = build_slice_mux(b, rs0, a2);
      const Bus p2o2 = build_slice_mux(b, rs1, a2);
      const Bus p1o2 = build_slice_mux(b, rs0, a3);
      const Bus p3o2 = build_slice_mux(b, rs1, a3);
      b.add_output(fmt::format("p{}", 2 * m + 1),
                   compose_lm_output(b, p0o2, p2o2, p1o2, p3o2));
    }
    b.note_block("lm");
  }
  return b.take();
}

}  // namespace

Netlist build_netlist(ArchKind arch, std::size_t n, const NibbleMode& mode) {
  if (n == 0 || n > kMaxVectorLen)
    throw std::invalid_argument("build_netlist: n must be in 1..64");
  switch (arch) {
    case ArchKind::Wallace:  return build_wallace(n);
    case ArchKind::ShiftAdd: return build_shift_add(n);
    case ArchKind::Booth:    return build_booth(n);
    case ArchKind::Nibble:   return build_nibble(n, mode);
    case ArchKind::LutArray: return build_lut_array(n);
  }
  throw std::invalid_argument("build_netlist: unknown architecture");
}

}  // namespace mulsim
