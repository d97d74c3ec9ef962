#pragma once

#include <array>
#include <string>
#include <vector>

#include "netrel/oracle.hpp"
#include "netrel/transfer.hpp"

namespace netrel::tables {

/// Perfect-node 25-node ladder (n = 24): degree 47 in p.
inline constexpr int kLadderN = 24;
inline constexpr int kSpectrumD = 47;

/// Published F-basis coefficients F_0..F_35 of the 25-node perfect ladder.
inline const std::array<const char*, 36>& table1_reference() {
  static const std::array<const char*, 36> v{
      "1",            "47",           "1079",         "16103",        "175418",       "1484837",
      "10151340",     "57524387",     "275139029",    "1125395882",   "3974128827",   "12199394435",
      "32708854487",  "76833130394",  "158368734141", "286502593795", "454444238576", "630595957484",
      "762855455898", "800820887863", "725278875430", "562806091836", "371300292894", "206539411448",
      "96061397122",  "37052347922",  "11756780232",  "3042073238",   "635100751",    "105465538",
      "13648753",     "1334810",      "93929",        "4368",         "113",          "1"};
  return v;
}

struct Table2Row {
  const char* p;
  const char* kruskal_katona;  // paper-reported, not computed
  const char* min_cost;        // paper-reported, not computed
  const char* brecht_colbourn; // paper-reported, not computed
  const char* exact;
};

inline const std::array<Table2Row, 16>& table2_reference() {
  static const std::array<Table2Row, 16> v{{
      {"0.75", "0.031682", "0.054681", "0.054681", "0.625163"},
      {"0.80", "0.068803", "0.119917", "0.430912", "0.773696"},
      {"0.82", "0.092654", "0.161200", "0.558991", "0.824038"},
      {"0.84", "0.124041", "0.214282", "0.669269", "0.867950"},
      {"0.86", "0.165305", "0.281396", "0.761945", "0.905042"},
      {"0.88", "0.219694", "0.364529", "0.837486", "0.935251"},
      {"0.90", "0.291856", "0.464826", "0.896659", "0.958806"},
      {"0.91", "0.336579", "0.521297", "0.920440", "0.968231"},
      {"0.92", "0.388392", "0.581555", "0.940574", "0.976194"},
      {"0.93", "0.448415", "0.644934", "0.957259", "0.982785"},
      {"0.94", "0.517724", "0.710375", "0.970720", "0.988109"},
      {"0.95", "0.597041", "0.776313", "0.981207", "0.992275"},
      {"0.96", "0.686113", "0.840514", "0.989003", "0.995400"},
      {"0.97", "0.782518", "0.899895", "0.994420", "0.997608"},
      {"0.98", "0.879474", "0.950274", "0.997801", "0.999024"},
      {"0.99", "0.961964", "0.986085", "0.999524", "0.999778"},
  }};
  return v;
}

/// Rel2 of the perfect-node ladder with n + 1 nodes as an exact polynomial in p.
inline QPoly ladder_perfect_polynomial(int n = kLadderN) {
  return rel2_perfect_uniform_sequence<QPoly>(Family::bc, n, QPoly::x()).back();
}

inline std::vector<Rational> table1_computed() {
  return coefficient_spectrum(ladder_perfect_polynomial(), kSpectrumD);
}

struct Table2Computed {
  std::string p, exact;
};

/// Exact column at 6 decimals.
inline std::vector<Table2Computed> table2_computed() {
  const QPoly poly = ladder_perfect_polynomial();
  std::vector<Table2Computed> out;
  for (const auto& row : table2_reference()) {
    Rational p = Rational::parse(row.p);
    out.push_back({row.p, poly.eval(p).to_decimal(6)});
  }
  return out;
}

}  // namespace netrel::tables
