#ifndef IONLINK_IONLINK_HPP
#define IONLINK_IONLINK_HPP

#include "ionlink/atomic_model.hpp"
#include "ionlink/constants.hpp"
#include "ionlink/dispersion.hpp"
#include "ionlink/emission.hpp"
#include "ionlink/entanglement.hpp"
#include "ionlink/error.hpp"
#include "ionlink/fiber.hpp"
#include "ionlink/markov_chain.hpp"
#include "ionlink/qfc.hpp"
#include "ionlink/trap.hpp"
#include "ionlink/version.hpp"

#endif
