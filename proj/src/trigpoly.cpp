#include "zfr/trigpoly.hpp"

namespace zfr {

template class TrigPoly<double>;
template class TrigPoly<Real>;

}  // namespace zfr
