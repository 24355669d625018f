# coding=utf-8

"""
Module to compute normal forms, apply automorphisms, list orbits and run the
verification suites from the command line
"""

import argparse
import logging
import sys
from typing import Optional

import mennicke.parser as config_parser
from mennicke import ggroup, mendo, mgroup, pgroup, util, verify, vgroup
from mennicke.ggroup import RecognitionError
from mennicke.wordcore import ALPHABETS, collect, parse_word

NAMED_AUTOMORPHISMS = {"theta": "D", "A": "A", "E": "E"}


def normal_form(group: str, text: str) -> str:
    """
    :param group: M, V, G or P
    :param text: word over the alphabet of the group
    :return: normal form text
    """
    if group == "V":
        return str(vgroup.to_uvw_word(vgroup.evaluate(parse_word(text, "V"))))
    return str(collect(parse_word(text, group), group))


def _target_group(text: str) -> str:
    for group in ("M", "V", "G"):
        try:
            parse_word(text, group)
        except ValueError:
            continue
        return group
    raise ValueError(f"cannot infer the group of {text!r}, use letters of M, V or G.")


def apply_automorphism(aut: str, text: str, group: Optional[str] = None) -> str:
    """
    Apply a named automorphism (theta, A, Psi, E) or one given as a G- or P-word
    to a word of M, V or G.

    :param aut: automorphism name or word
    :param text: word to act on
    :param group: group of the word, inferred from its alphabet if None
    :return: normal form text of the image
    """
    target = _target_group(text) if group is None else group
    if aut == "Psi":
        if target != "V":
            raise ValueError(f"Psi acts on V only, got a word of {target}.")
        image = vgroup.apply(vgroup.PSI, vgroup.evaluate(parse_word(text, "V")))
        return str(vgroup.to_uvw_word(image))

    p = pgroup.parse(NAMED_AUTOMORPHISMS.get(aut, aut))
    if target == "G":
        return str(pgroup.act(p)(ggroup.parse(text)))
    if p.m:
        raise ValueError(f"{aut} is not an automorphism of M, it acts on G only.")
    if target == "M":
        return str(ggroup.semantic(p.g)(mgroup.evaluate(parse_word(text, "M"))))
    image = vgroup.apply(vgroup.restrict(p.g), vgroup.evaluate(parse_word(text, "V")))
    return str(vgroup.to_uvw_word(image))


def list_orbits() -> str:
    gens = [ggroup.semantic(g) for g in ggroup.GENERATORS.values()]
    return mendo.format_partition(mendo.orbits(gens))


def list_checks() -> str:
    return "\n".join(
        f"{spec.check_id:<28} {spec.description}" for spec in verify.select_checks()
    )


def run_verification(
    sections: Optional[list],
    config_path: Optional[list],
    seed: Optional[int],
    samples: Optional[int],
    fmt: str,
    log_dir: str,
    save: bool,
    quiet: bool,
) -> int:
    """
    :return: 0 if every selected check passes, 1 otherwise
    """
    config = config_parser.load_configs(config_path)
    if seed is not None:
        config["verify"]["seed"] = seed
    if samples is not None:
        config["verify"]["samples"] = samples
    config_parser.config_sanity_check(config)

    specs = verify.select_checks(sections)
    ctx = verify.CheckContext.from_config(config["verify"], quiet=quiet)
    logging.info("running %d checks with seed %d", len(specs), ctx.seed)
    results = verify.run_checks(specs, ctx)

    if save:
        log_dir = util.build_log_dir(log_dir)
        config_parser.save(config=config, out_dir=log_dir)
        util.save_report(log_dir, results)
        logging.info("report saved in %s", log_dir)

    print(util.format_results(results, fmt))
    failed = [result.check_id for result in results if not result.passed]
    if failed:
        logging.warning("%d checks failed: %s", len(failed), ", ".join(failed))
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="mennicke", formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    parser.add_argument(
        "--verbose", "-v", help="Log debug messages", action="store_true"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    nf = subparsers.add_parser(
        "nf",
        help="Print the normal form of a word",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    nf.add_argument(
        "--group",
        "-g",
        help="Group of the word",
        choices=sorted(ALPHABETS),
        default="M",
    )
    nf.add_argument("word", help="Word such as 'x y^-2 z', empty for 1", type=str)

    apply = subparsers.add_parser(
        "apply",
        help="Apply an automorphism to a word",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    apply.add_argument(
        "--aut",
        "-a",
        help="theta / A / Psi / E, or a word over X, Y, Z, A, B, C, D, E",
        type=str,
        required=True,
    )
    apply.add_argument(
        "--to", "-t", help="Word of M, V or G to act on", type=str, required=True
    )
    apply.add_argument(
        "--group",
        "-g",
        help="Group of the word, inferred from its letters if omitted",
        choices=["M", "V", "G"],
        default=None,
    )

    subparsers.add_parser(
        "orbits", help="Print the Aut(M)-orbits on the cosets of M^2"
    )

    check = subparsers.add_parser(
        "verify",
        help="Run the verification checks",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    check.add_argument(
        "--section",
        "-s",
        help="Section to verify, 2 to 20. Can be repeated.",
        type=int,
        action="append",
    )
    check.add_argument("--all", help="Verify every section", action="store_true")
    check.add_argument("--list", help="List the registered checks", action="store_true")
    check.add_argument("--seed", help="Override verify.seed", type=int, default=None)
    check.add_argument(
        "--samples", "-n", help="Override verify.samples", type=int, default=None
    )
    check.add_argument(
        "--format",
        "-f",
        help="Report format on stdout",
        choices=["text", "json", "jsonl"],
        default="text",
    )
    check.add_argument(
        "--config_path",
        "-c",
        help="Path of config, must end with .yaml. Can pass multiple paths.",
        type=str,
        nargs="*",
        default=None,
    )
    check.add_argument(
        "--log_dir", "-l", help="Path of log directory", default="", type=str
    )
    check.add_argument("--no_save", help="Do not write reports", action="store_true")
    check.add_argument("--quiet", "-q", help="Hide progress bars", action="store_true")
    return parser


def main(args=None) -> int:
    """
    Function to run in command line with argparse

    :return: exit code, 0 on success, 1 on a failed check, 2 on invalid input
    """
    parser = build_parser()
    args = parser.parse_args(args)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s:%(message)s",
    )

    if args.command == "verify" and not (args.list or args.all or args.section):
        parser.error("verify needs --section, --all or --list")

    try:
        if args.command == "nf":
            print(normal_form(args.group, args.word))
        elif args.command == "apply":
            print(apply_automorphism(args.aut, args.to, args.group))
        elif args.command == "orbits":
            print(list_orbits())
        elif args.list:
            print(list_checks())
        else:
            return run_verification(
                sections=None if args.all else args.section,
                config_path=args.config_path,
                seed=args.seed,
                samples=args.samples,
                fmt=args.format,
                log_dir=args.log_dir,
                save=not args.no_save,
                quiet=args.quiet or args.format != "text",
            )
    except RecognitionError as err:
        logging.error("verification aborted: %s", err)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
