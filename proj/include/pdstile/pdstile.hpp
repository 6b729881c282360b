#pragma once

#include "pdstile/algebra/char_poly.hpp"
#include "pdstile/algebra/factor.hpp"
#include "pdstile/algebra/perron.hpp"
#include "pdstile/algebra/pisot.hpp"
#include "pdstile/apcomplex/ap_complex.hpp"
#include "pdstile/bpa/balanced_pair.hpp"
#include "pdstile/io/json_io.hpp"
#include "pdstile/io/registry.hpp"
#include "pdstile/overlap/builtins.hpp"
#include "pdstile/overlap/overlap.hpp"
#include "pdstile/overlap/svg.hpp"
#include "pdstile/symbolic/arnoux_rauzy.hpp"
#include "pdstile/symbolic/substitution.hpp"
#include "pdstile/verdicts/pds_verdict.hpp"
#include "pdstile/verdicts/rauzy.hpp"
