"""Admin command line: serve, seed-schemes, seed-case, reindex, export-all."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..model import draft_from_document
from ..roles import UserRole
from .config import ServiceConfig, load_config, load_tokens
from .repository import ExportFormat, Repository


def _repository(config: ServiceConfig) -> Repository:
    return Repository(
        data_dir=config.data_dir,
        locale_assets=config.locale_assets,
        schemes_dir=config.schemes_dir,
        default_locale=config.default_locale,
    )


def cmd_serve(config: ServiceConfig, args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    tokens = load_tokens(config.token_file) if config.token_file else {}
    app = create_app(_repository(config), tokens)
    uvicorn.run(app, host=args.host or config.host, port=args.port or config.port)
    return 0


def cmd_seed_schemes(config: ServiceConfig, args: argparse.Namespace) -> int:
    repo = _repository(config)
    scheme_set = repo.seed_schemes(Path(args.file).read_bytes())
    print(f"installed scheme set {scheme_set.name!r} "
          f"({len(scheme_set.schemes)} schemes, locale {scheme_set.locale})")
    return 0


def cmd_seed_case(config: ServiceConfig, args: argparse.Namespace) -> int:
    data = json.loads(Path(args.file).read_text(encoding="utf-8"))
    repo = _repository(config)
    case_id = repo.create_case(
        author_ref=data.get("author_ref", "seed"),
        role=UserRole.MANAGER,
        title=data["title"],
        abstract=data["abstract"],
        attachments=tuple(data.get("attachments", [])),
        tags=tuple(data.get("tags", [])),
    )
    arguments = data.get("arguments", [])
    for doc in arguments:
        draft = draft_from_document({**doc, "case_ref": case_id})
        repo.post_argument(case_id, draft, author_ref=doc["author_ref"])
    print(f"created case {case_id} ({len(arguments)} seeded arguments)")
    return 0


def cmd_reindex(config: ServiceConfig, args: argparse.Namespace) -> int:
    stats = _repository(config).rebuild_index()
    print(f"reindexed {stats.documents} documents "
          f"({stats.cases} cases, {stats.arguments} arguments, {stats.tokens} tokens)")
    return 0


def cmd_export_all(config: ServiceConfig, args: argparse.Namespace) -> int:
    repo = _repository(config)
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    count = 0
    for case in repo.list_cases():
        page = repo.list_arguments(case.id, page_size=100)
        records = list(page.items)
        while page.items and page.total > page.page * page.page_size:
            page = repo.list_arguments(case.id, page=page.page + 1, page_size=100)
            records.extend(page.items)
        for record in records:
            stem = out / record.id
            stem.with_suffix(".json").write_bytes(
                repo.export_argument(record.id, ExportFormat.STRUCTURED_JSON))
            stem.with_suffix(".txt").write_bytes(
                repo.export_argument(record.id, ExportFormat.PLAIN_TEXT))
            count += 1
    print(f"exported {count} arguments to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="argcoach",
                                     description="argument coaching platform")
    parser.add_argument("--config", help="path to the service config file")
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default=None)
    serve.add_argument("--port", type=int, default=None)
    serve.set_defaults(run=cmd_serve)

    seed_schemes = sub.add_parser("seed-schemes", help="install a scheme-set document")
    seed_schemes.add_argument("file")
    seed_schemes.set_defaults(run=cmd_seed_schemes)

    seed_case = sub.add_parser("seed-case", help="create a case from a JSON file")
    seed_case.add_argument("file")
    seed_case.set_defaults(run=cmd_seed_case)

    reindex = sub.add_parser("reindex", help="rebuild the search index")
    reindex.set_defaults(run=cmd_reindex)

    export_all = sub.add_parser("export-all", help="export every argument to a directory")
    export_all.add_argument("dir")
    export_all.set_defaults(run=cmd_export_all)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = load_config(args.config)
    return args.run(config, args)


if __name__ == "__main__":
    sys.exit(main())
