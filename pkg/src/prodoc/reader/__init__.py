"""Reading Prolog source: tokens, operator table, terms, clause units."""

from .errors import (
    BadCharacter,
    ReaderError,
    TermSyntaxError,
    UnterminatedBlockComment,
    UnterminatedQuoted,
)
from .operators import OperatorTable, default_operator_table
from .parser import (
    ClauseUnit,
    CommentRecord,
    ReadMessage,
    ReadResult,
    merge_comment_tokens,
    parse_term_text,
    read_source,
)
from .terms import (
    Atom,
    Compound,
    Float,
    Integer,
    String,
    Term,
    Var,
    format_term,
    list_parts,
    shape,
)
from .tokenizer import TOKENIZER_BACKEND, tokenize
from .tokens import SourceSpan, Token, atom_value

__all__ = [
    "Atom", "BadCharacter", "ClauseUnit", "CommentRecord", "Compound",
    "Float", "Integer", "OperatorTable", "ReadMessage", "ReadResult",
    "ReaderError", "SourceSpan", "String", "Term", "TermSyntaxError",
    "Token", "TOKENIZER_BACKEND", "UnterminatedBlockComment",
    "UnterminatedQuoted", "Var", "atom_value", "default_operator_table",
    "format_term", "list_parts", "merge_comment_tokens", "parse_term_text",
    "read_source", "shape", "tokenize",
]
