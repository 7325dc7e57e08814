#pragma once

#include "zpinterp/analysis.hpp"
#include "zpinterp/interpolate.hpp"
#include "zpinterp/kernels.hpp"
#include "zpinterp/seqio.hpp"
#include "zpinterp/sequence.hpp"
#include "zpinterp/signals.hpp"
#include "zpinterp/transforms.hpp"
