"""
RatSwarm - 실행 진입점
저장소 루트에서 `python app.py <command>` 로 실행
"""
import sys
from pathlib import Path

# 경로 설정 - ratswarm 모듈 import를 위해
sys.path.insert(0, str(Path(__file__).parent))

from ratswarm.app import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
