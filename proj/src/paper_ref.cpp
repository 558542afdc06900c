#include "mulsim/paper_ref.hpp"

namespace mulsim {

PaperEntry paper_reference(ArchKind arch, std::size_t n) {
  PaperEntry e;
  switch (arch) {
    case ArchKind::ShiftAdd:
      if (n == 4) e = {528.57, 0.0269};
      if (n == 8) e = {982.42, 0.051};
      if (n == 16) e = {std::nullopt, 0.0988};
      break;
    case ArchKind::Booth:
      if (n == 4) e = {465.32, 0.0257};
      break;
    case ArchKind::Nibble:
      if (n == 4) e = {463.55, 0.0325};
      if (n == 8) e = {673.60, 0.0442};
      if (n == 16) e = {1132.29, 0.0605};
      break;
    case ArchKind::Wallace:
      if (n == 4) e = {584.14, 0.054};
      if (n == 8) e = {std::nullopt, 0.108};
      if (n == 16) e = {2336.54, 0.216};
      break;
    case ArchKind::LutArray:
      if (n == 4) e = {806.78, 0.0727};
      if (n == 8) e = {1523.72, 0.138};
      if (n == 16) e = {2954.20, 0.276};
      break;
  }
  return e;
}

}  // namespace mulsim
