#pragma once

#include "support/fixtures.hpp"
#include "tristrat/model.hpp"

// Parameter sets of the three worked cases.
namespace cases {

inline tristrat::ParamSet middle_east() {
  tristrat::ParamValues v;
  v.mu = fixtures::q("0.25");
  v.nu = fixtures::q("-0.25");
  v.lambda = fixtures::q("0.73");
  v.tau = fixtures::q("0.27");
  v.gamma_p = fixtures::q("0.5");
  v.gamma_t = fixtures::q("0.5");
  v.order = 3;
  return tristrat::ParamSet(v);
}

inline tristrat::ParamSet nba() {
  tristrat::ParamValues v;
  v.mu = fixtures::q("0.3");
  v.nu = fixtures::q("-0.3");
  v.lambda = fixtures::q("0.94");
  v.tau = fixtures::q("0.06");
  v.gamma_p = fixtures::q("0.5");
  v.gamma_t = fixtures::q("0.5");
  v.order = 5;
  return tristrat::ParamSet(v);
}

inline tristrat::ParamSet gansu() {
  tristrat::ParamValues v;
  v.mu = fixtures::q("0.3");
  v.nu = fixtures::q("-0.3");
  v.lambda = fixtures::q("0.72");
  v.tau = fixtures::q("0.275");
  v.gamma_p = fixtures::q("0.5");
  v.gamma_t = fixtures::q("0.5");
  v.order = 6;
  return tristrat::ParamSet(v);
}

inline const char* kMiddleEastClique = "p1,p3,p4,p6";
inline const char* kNbaClique = "p1,p2,p3,p6,p9";
inline const char* kGansuClique = "p1,p3,p4,p5,p6,p9,p10,p11";

}  // namespace cases
