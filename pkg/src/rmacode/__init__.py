"""Reed-Muller based systematic authentication codes and their deception probabilities."""

from .auth import (
    AuthConfig,
    AuthKey,
    Message,
    decode_message,
    dump_key,
    encode_message,
    generate_tag,
    load_key,
    project,
    sample_key,
    verify,
)
from .bits import BitVector, weight
from .deception import (
    DeceptionReport,
    TagDistribution,
    authentication_matrix,
    count_tags_by_weight,
    p_deception_from_definitions,
    p_impersonation,
    p_substitution_bruteforce,
    p_substitution_closed_form,
    tag_distribution,
    wt_range,
)
from .errors import DimensionError, GuardrailError, NoWitnessError, ParameterError
from .rm_code import (
    RmCode,
    SubcodeParams,
    build_generator,
    encode,
    encode_source,
    prefix_codeword_weights,
    source_to_input,
)

__version__ = "0.1.0"
