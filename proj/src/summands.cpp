#include "ordsum/summands.hpp"

#include "ordsum/errors.hpp"

namespace ordsum {

SummandList::SummandList(FiniteLattice lattice, std::vector<Summand> summands, bool validate)
    : lattice_(std::move(lattice)), summands_(std::move(summands)) {
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    const auto& s = summands_[i];
    const std::string where = "summand " + std::to_string(i + 1);
    if (!s.interval.lattice().same_as(lattice_))
      throw Error(ErrorKind::CarrierMismatch, where + " lives on a different lattice");
    if (!(s.tnorm.carrier() == s.interval))
      throw Error(ErrorKind::CarrierMismatch, where + ": t-norm carrier differs from its interval");
    if (validate) {
      const auto report = check_tnorm(s.tnorm, Exec::Serial);
      if (!report.is_tnorm())
        throw Error(ErrorKind::ValidationError, where + " ('" + s.tnorm.name() + "') is not a t-norm\n" +
                                                    describe(s.tnorm, report));
    }
  }
  for (std::size_t i = 0; i + 1 < summands_.size() && chain_ok_; ++i) {
    if (!lattice_.leq(summands_[i].interval.hi(), summands_[i + 1].interval.lo())) {
      chain_ok_ = false;
      violation_ = i + 1;
    }
  }
}

}  // namespace ordsum
