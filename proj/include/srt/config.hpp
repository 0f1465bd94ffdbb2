#pragma once

#include <string>

#include "srt/experiment.hpp"

namespace srt {

// Loads a sweep spec from a JSON config file. Recognized keys:
//   p0, pd, pf, gamma_p_db, rate, n_relays        scalars
//   gamma_s_db                                    scalar or {start,stop,step}
//   sigma2.{sd,se,pd,pe}                          scalars
//   sigma2.{si,id,ie,pi}                          scalar broadcast or list
//   trials, seed, workers, schemes, rejection_sampling
//   emit.{analytic,sim}
// Missing keys keep the defaults documented in the README. Throws
// std::runtime_error with the offending key on malformed input.
SweepSpec load_sweep_spec(const std::string& path);

SweepSpec parse_sweep_spec(const std::string& json_text);

}  // namespace srt
