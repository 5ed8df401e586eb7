import logging
import os

from flask import Flask
from flask.cli import FlaskGroup

from src.routes.analyze import analyze_bp
from src.routes.sample import sample_bp
from src.routes.trace import trace_bp
from src.routes.units import units_bp
from src.routes.verify import verify_bp


def create_app(config_name=None):
    app = Flask(__name__)

    # Configure the app using environment variables
    app.config['TESTING'] = config_name == 'testing' or \
        os.environ.get('TESTING', 'False').lower() == 'true'
    app.config['LOG_LEVEL'] = os.environ.get('HOPFION_LOG_LEVEL', 'WARNING').upper()
    app.config['WORKERS'] = int(os.environ.get('HOPFION_WORKERS', 1))
    app.config['REL_TOL'] = float(os.environ.get('HOPFION_REL_TOL', 1e-10))
    app.config['ABS_TOL'] = float(os.environ.get('HOPFION_ABS_TOL', 1e-12))
    app.config['QUAD_REL_TOL'] = float(os.environ.get('HOPFION_QUAD_REL_TOL', 1e-7))

    logging.basicConfig(level=app.config['LOG_LEVEL'],
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    logging.getLogger().setLevel(app.config['LOG_LEVEL'])

    # One blueprint per command; cli_group=None puts them at the top level
    app.register_blueprint(sample_bp)
    app.register_blueprint(trace_bp)
    app.register_blueprint(analyze_bp)
    app.register_blueprint(verify_bp)
    app.register_blueprint(units_bp)

    return app


cli = FlaskGroup(create_app=create_app, add_default_commands=False,
                 help="Hopfion-like Dirac and Maxwell solutions: sampling, tracing, analysis, verification.")

if __name__ == '__main__':
    cli()
