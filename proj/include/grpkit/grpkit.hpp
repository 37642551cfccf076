#pragma once

#include "affine.hpp"
#include "atlas.hpp"
#include "corpus.hpp"
#include "counterexample.hpp"
#include "criteria.hpp"
#include "errors.hpp"
#include "fitting.hpp"
#include "fp_module.hpp"
#include "gf_linalg.hpp"
#include "grp_io.hpp"
#include "homomorphism.hpp"
#include "limits.hpp"
#include "maximals.hpp"
#include "meataxe.hpp"
#include "perm.hpp"
#include "perm_group.hpp"
#include "stab_chain.hpp"
#include "structure.hpp"
