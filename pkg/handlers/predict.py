# handlers/predict.py
from __future__ import annotations

import argparse

from constructions import predict
from handlers.common import EXIT_OK, add_size_args, print_json
from models import Family, PredictedValue, Variant
from texts import PREDICT_NA, PREDICT_OK
from utils.parsing import parse_int_list


def _params(args: argparse.Namespace) -> dict:
    params = {
        "n": args.n,
        "k": args.k,
        "a": args.a,
        "parts": args.parts,
        "asymmetric": args.asymmetric,
        "S": args.set,
    }
    if args.family == Family.DIRCYCLE:
        params["m"] = params.pop("n")
    if args.family == Family.C2K:
        params["variant"] = args.variant
    return params


def render(pv: PredictedValue) -> str:
    params = " ".join(f"{k}={v}" for k, v in pv.params.items())
    if not pv.applicable:
        return PREDICT_NA.format(family=pv.family, params=params, reason=pv.reason)
    src = pv.src if pv.src is not None else "?"
    return PREDICT_OK.format(family=pv.family, params=params, rc=pv.rc, src=src, theorem=pv.theorem)


def handle(args: argparse.Namespace) -> int:
    pv = predict(args.family, **_params(args))
    if args.json:
        print_json(pv.model_dump(mode="json"))
    else:
        print(render(pv))
    # неприменимость считается ответом, а не ошибкой
    return EXIT_OK


def register(sub) -> None:
    p = sub.add_parser("predict", help="значение rc*/src* по теореме")
    p.add_argument("family", type=Family, choices=list(Family))
    add_size_args(p)
    p.add_argument("--variant", choices=[v.value for v in Variant], default=Variant.K.value)
    p.add_argument("--asymmetric", type=int, help="subcycle: число асимметричных дуг")
    p.add_argument("--set", type=parse_int_list, help="circulant: генераторы")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=handle)
