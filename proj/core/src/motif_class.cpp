#include "tmotif/motif_class.hpp"

#include <stdexcept>

namespace tmotif {
namespace {

constexpr std::array<std::string_view, kPairTypeCount> kNames = {
    "repetition", "ping_pong", "in_burst", "out_burst", "convey", "weakly_connected"};
constexpr std::array<char, kPairTypeCount> kLetters = {'R', 'P', 'I', 'O', 'C', 'W'};

std::optional<PairType> pair_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kPairTypeCount; ++i) {
    if (kNames[i] == name) return static_cast<PairType>(i);
  }
  return std::nullopt;
}

}  // namespace

std::string_view pair_type_name(PairType t) { return kNames[static_cast<std::size_t>(t)]; }
char pair_type_letter(PairType t) { return kLetters[static_cast<std::size_t>(t)]; }

MotifClass MotifClass::from_index(std::size_t index) {
  if (index >= kMotifClassCount) throw std::out_of_range("motif class index out of range");
  return MotifClass(static_cast<std::uint8_t>(index));
}

std::optional<MotifClass> MotifClass::from_name(std::string_view name) {
  if (name.starts_with("pair:")) {
    if (auto t = pair_from_name(name.substr(5))) return pair(*t);
    return std::nullopt;
  }
  if (name.starts_with("seq:")) {
    const auto rest = name.substr(4);
    const auto plus = rest.find('+');
    if (plus == std::string_view::npos) return std::nullopt;
    auto a = pair_from_name(rest.substr(0, plus));
    auto b = pair_from_name(rest.substr(plus + 1));
    if (a && b) return seq(*a, *b);
  }
  return std::nullopt;
}

std::string MotifClass::name() const {
  if (is_pair()) return "pair:" + std::string(pair_type_name(first()));
  return "seq:" + std::string(pair_type_name(first())) + "+" + std::string(pair_type_name(second()));
}

PairType pair_type_unchecked(const Event& e1, const Event& e2) {
  if (e2.src == e1.src) return e2.dst == e1.dst ? PairType::Repetition : PairType::OutBurst;
  if (e2.src == e1.dst) return e2.dst == e1.src ? PairType::PingPong : PairType::Convey;
  if (e2.dst == e1.dst) return PairType::InBurst;
  return PairType::WeaklyConnected;  // e2.dst == e1.src
}

std::optional<PairType> classify_pair(const Event& e1, const Event& e2) {
  if (e1.time > e2.time) throw std::invalid_argument("classify_pair: events out of time order");
  if (e1.time == e2.time) throw std::invalid_argument("classify_pair: equal timestamps");
  if (e1.is_self_loop() || e2.is_self_loop()) {
    throw std::invalid_argument("classify_pair: self-loop events have no pair type");
  }
  if (!e2.touches(e1.src) && !e2.touches(e1.dst)) return std::nullopt;
  return pair_type_unchecked(e1, e2);
}

}  // namespace tmotif
