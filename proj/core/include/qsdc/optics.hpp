#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qsdc/bell.hpp"
#include "qsdc/errors.hpp"
#include "qsdc/rng.hpp"
#include "qsdc/types.hpp"

namespace qsdc {

enum class PhotonOwner : std::uint8_t { Legitimate, Spy };

// One photon in a time slot. The travel qubit it carries is the PairState
// registered under pair_ref.
struct Photon {
  double wavelength_nm = 0.0;
  double delay_ns = 0.0;  // offset within the pulse, >= 0
  PairId pair_ref = 0;
  PhotonOwner owner = PhotonOwner::Legitimate;

  bool operator==(const Photon&) const = default;
};

// A time slot of the travel sequence. Unattacked runs have exactly one
// Legitimate photon per pulse; attacks may add Spy photons but never remove
// or reorder Legitimate ones.
struct PhotonPulse {
  SlotIndex slot_index = 0;
  std::vector<Photon> photons;
};

// Receiver-side hardware parameters.
struct DeviceConfig {
  double lambda_legit_nm = 1550.0;    // operating wavelength
  double time_window_ns = 1.0;        // device gate: photons at delay >= this are inert
  double fidelity_sigma_nm = 1.0;     // width of the wavelength fidelity roll-off
  double filter_passband_nm = 0.5;    // filter half-width around lambda_legit
  double pns_sample_fraction = 0.25;  // per-pulse sampling probability for the splitter check

  // ConfigError (naming the field) on any out-of-range value.
  void validate() const;
};

// Owns every live PairState of one run: the legitimate pairs and any spy
// pairs an adversary creates. A run owns its registry exclusively.
class PairRegistry {
 public:
  PairId create(PairState initial) {
    states_.push_back(initial);
    return static_cast<PairId>(states_.size() - 1);
  }

  PairState& at(PairId id);
  const PairState& at(PairId id) const;

  std::size_t size() const { return states_.size(); }

 private:
  std::vector<PairState> states_;
};

// Wavelength-dependent encoding device. Applies `op` to the travel qubit of
// the photon's pair with probability exp(-((dl)/sigma)^2), dl = |wavelength -
// lambda_legit|; on a miss the pair is left unchanged (the operation simply
// did not act on that photon). At dl == 0 the application is certain and no
// randomness is consumed. Returns whether the op was applied.
//
// Callers only pass photons inside the time window; an unknown pair_ref is a
// fatal HarnessError (registry corruption).
bool device_apply(const Photon& photon, PairRegistry& registry, EncodeOp op,
                  const DeviceConfig& cfg, Rng& rng);

// Wavelength filter: drops every photon with |wavelength - lambda_legit| >
// filter_passband, preserving order. Idempotent; legitimate-wavelength
// photons always survive.
PhotonPulse filter_pulse(PhotonPulse pulse, const DeviceConfig& cfg);

enum class PnsBasis : std::uint8_t { SigmaZ, SigmaX };

struct PnsOutcome {
  bool multiphoton = false;  // both splitter ports saw at least one photon
  int photons_in_window = 0;
  PnsBasis basis_port_a = PnsBasis::SigmaZ;  // measurement bases, recorded
  PnsBasis basis_port_b = PnsBasis::SigmaZ;  // but irrelevant to the flag
};

// 50/50 photon-number-splitter check. The pulse is consumed: its photons are
// measured destructively and leave the protocol. Each in-window photon routes
// to a port independently, so k photons flag a coincidence with probability
// 1 - 2^(1-k); a single photon never does.
PnsOutcome pns_check(const PhotonPulse& pulse, const DeviceConfig& cfg,
                     Rng& rng);

// Adversary access point on a channel direction. May add or remove Spy
// photons inside the pulses it is handed.
using TapHook = std::function<void(std::vector<PhotonPulse>&)>;

// Runs `hook` over the pulse train and enforces the attack model: slot order
// and every Legitimate photon must come back untouched (checked field by
// field, not assumed). A violating hook raises HarnessError. An empty hook is
// the identity tap.
std::vector<PhotonPulse> tap_and_inject(ChannelDirection direction,
                                        std::vector<PhotonPulse> pulses,
                                        const TapHook& hook);

}  // namespace qsdc
